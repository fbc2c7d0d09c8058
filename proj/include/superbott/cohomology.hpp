#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "superbott/bott.hpp"
#include "superbott/character.hpp"
#include "superbott/lr.hpp"
#include "superbott/partition.hpp"
#include "superbott/qseries.hpp"
#include "superbott/superschur.hpp"
#include "superbott/types.hpp"

namespace superbott {

/// The bundle S_α Q ⊗ S_β(R*) on the super Grassmannian Gr(p|q, V), dim V = m|n.
struct BundleSpec {
  int p = 0;
  int q = 0;
  SuperDim d;
  Partition alpha;
  Partition beta;

  void validate() const {
    if (p < 0 || p > d.even || q < 0 || q > d.odd) throw PreconditionError("sub-bundle rank out of range");
  }
};

enum class HypothesisCase { Case1, Case2, None };

inline std::string to_string(HypothesisCase h) {
  switch (h) {
    case HypothesisCase::Case1: return "case1";
    case HypothesisCase::Case2: return "case2";
    case HypothesisCase::None: return "none";
  }
  return "none";
}

/**
 * Case1: m - n - ℓ(α) ≥ p - q ≥ ℓ(β).
 * Case2: n - m - α_1 ≥ q - p ≥ β_1.
 * Case1 wins when both hold.
 */
inline HypothesisCase hypothesis_case(const BundleSpec& s) {
  s.validate();
  const int m = s.d.even, n = s.d.odd;
  if (m - n - s.alpha.length() >= s.p - s.q && s.p - s.q >= s.beta.length()) return HypothesisCase::Case1;
  if (n - m - s.alpha.first() >= s.q - s.p && s.q - s.p >= s.beta.first()) return HypothesisCase::Case2;
  return HypothesisCase::None;
}

inline constexpr const char* kHypothesisError = "factorization hypothesis not satisfied";

/// H^•(X; O_X): Poincaré polynomial of Gr(q, C^n) in Case1, Gr(p, C^m) in Case2.
inline HilbertSeries structure_sheaf_hilbert(const BundleSpec& s) {
  switch (hypothesis_case(s)) {
    case HypothesisCase::Case1: return flag_poincare(std::vector<int>{s.q, s.d.odd - s.q});
    case HypothesisCase::Case2: return flag_poincare(std::vector<int>{s.p, s.d.even - s.p});
    case HypothesisCase::None: break;
  }
  throw PreconditionError(kHypothesisError);
}

// ---------------------------------------------------------------------------
// E1 page

struct E1Options {
  int jobs = 1;
  /// Cap on Bott evaluations; 0 reads SUPERBOTT_MAX_TERMS (default 10^7).
  std::size_t max_terms = 0;
};

inline std::size_t default_max_terms() {
  if (const char* env = std::getenv("SUPERBOTT_MAX_TERMS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw PreconditionError("SUPERBOTT_MAX_TERMS must be a positive integer");
  }
  return 10'000'000;
}

/**
 * E1 page of the J-adic spectral sequence. `total` is graded by cohomological
 * degree; `bigraded` keeps (cohomological degree, filtration degree) for
 * inspection, where the filtration degree is the exterior-algebra degree.
 */
struct E1Page {
  GradedCharacter total;
  std::map<std::pair<int, int>, VirtualCharacter> bigraded;
  std::size_t terms = 0;

  /// Odd-degree terms on E1 mean some differential may be nonzero.
  bool possibly_nondegenerate() const { return total.has_odd_degree(); }
};

namespace detail {

struct LeviFactor {
  int sub = 0;   // rank of R
  int rank = 0;  // rank of V
};

// Runs Bott on every (Q-block, R-block) Levi weight pair of one classical
// Grassmannian and charges each pair against the shared term budget.
class BottCounter {
 public:
  BottCounter(std::atomic<std::size_t>& counter, std::size_t limit) : counter_(counter), limit_(limit) {}

  void accumulate(GradedCharacter& out, LeviFactor f, const WeightMultiset& q_blocks, const WeightMultiset& r_blocks,
                  Mult scale_by) {
    const std::size_t n = q_blocks.size() * r_blocks.size();
    if (counter_.fetch_add(n) + n > limit_)
      throw ResourceError("E1 expansion exceeds " + std::to_string(limit_) + " terms");
    for (const auto& [qw, qc] : q_blocks)
      for (const auto& [rw, rc] : r_blocks) {
        const auto full = levi_to_full(LeviWeight{qw, rw}, f.sub, f.rank);
        if (const auto r = bott(full)) {
          VirtualCharacter c(f.rank, 0);
          c.add(r->weight, GLWeight{}, scale_by * qc * rc);
          out.add(r->degree, c);
        }
      }
  }

 private:
  std::atomic<std::size_t>& counter_;
  std::size_t limit_;
};

inline GLWeight pad_weight(const Partition& p, int len) { return GLWeight::from_partition(p, len); }
inline GLWeight pad_dual(const Partition& p, int len) { return dual(GLWeight::from_partition(p, len)); }

struct SkewTerm {
  Partition shape;
  Mult mult;
};

// S_α(A0|A1) = ⊕_{μ ⊆ α} S_μ(A0) ⊗ S_{α^T/μ^T}(A1), with the odd skew factor expanded.
struct SuperSplit {
  Partition even;
  std::vector<SkewTerm> odd;
};

inline std::vector<SuperSplit> super_split(const Partition& alpha, int even_rank, int odd_rank) {
  std::vector<SuperSplit> out;
  const Partition alpha_t = transpose(alpha);
  for (const Partition& mu : subpartitions(alpha)) {
    if (mu.length() > even_rank) continue;
    SuperSplit s{mu, {}};
    for (const auto& [sigma, c] : skew_expand(SkewShape(alpha_t, transpose(mu))))
      if (sigma.length() <= odd_rank) s.odd.push_back({sigma, c});
    if (!s.odd.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/**
 * E1 page for S_α Q ⊗ S_β(R*) over X_bos = Gr(p, C^m) × Gr(q, C^n).
 *
 * gr(E) = S_α(Q0|Q1) ⊗ S_β(R0*|R1*) ⊗ ⋀(R0 ⊗ Q1*) ⊗ ⋀(Q0* ⊗ R1). Expanding:
 *   S_α(Q0|Q1)     → S_μ Q0 ⊗ S_σ Q1
 *   S_β(R0*|R1*)   → S_ν R0* ⊗ S_τ R1*
 *   ⋀(R0 ⊗ Q1*)    → S_λ R0 ⊗ S_{λ^T} Q1*,   λ in a p × (n-q) box
 *   ⋀(Q0* ⊗ R1)    → S_κ Q0* ⊗ S_{κ^T} R1,   κ in a (m-p) × q box
 * then regroups by Levi factor, applies Bott on each Grassmannian and Künneth.
 * The filtration degree of a summand is |λ| + |κ|.
 */
inline E1Page e1_page(const BundleSpec& s, const E1Options& opts = {}) {
  s.validate();
  const int m = s.d.even, n = s.d.odd;
  const int mQ = m - s.p, mR = s.p, nQ = n - s.q, nR = s.q;
  const detail::LeviFactor f0{mR, m}, f1{nR, n};

  const auto alpha_split = detail::super_split(s.alpha, mQ, nQ);
  const auto beta_split = detail::super_split(s.beta, mR, nR);

  std::vector<std::pair<Partition, Partition>> units;  // (λ, κ)
  for (const Partition& lambda : partitions_in_box(mR, nQ))
    for (const Partition& kappa : partitions_in_box(mQ, nR)) units.emplace_back(lambda, kappa);

  const std::size_t limit = opts.max_terms ? opts.max_terms : default_max_terms();
  std::atomic<std::size_t> counter{0};

  auto run_unit = [&](const std::pair<Partition, Partition>& unit, E1Page& acc) {
    detail::BottCounter bc(counter, limit);
    const auto& [lambda, kappa] = unit;
    const Partition lambda_t = transpose(lambda), kappa_t = transpose(kappa);
    const int filtration = lambda.size() + kappa.size();
    const GLWeight kappa_dual = detail::pad_dual(kappa, mQ);
    const GLWeight lambda_pad = detail::pad_weight(lambda, mR);
    const GLWeight lambda_t_dual = detail::pad_dual(lambda_t, nQ);
    const GLWeight kappa_t_pad = detail::pad_weight(kappa_t, nR);
    GradedCharacter unit_total(m, n);
    for (const auto& a : alpha_split) {
      const auto q0 = rational_tensor(detail::pad_weight(a.even, mQ), kappa_dual);
      for (const auto& b : beta_split) {
        const auto r0 = rational_tensor(detail::pad_dual(b.even, mR), lambda_pad);
        GradedCharacter g0(m, 0);
        bc.accumulate(g0, f0, q0, r0, 1);
        if (g0.empty()) continue;
        GradedCharacter g1(n, 0);
        for (const auto& sigma : a.odd) {
          const auto q1 = rational_tensor(detail::pad_weight(sigma.shape, nQ), lambda_t_dual);
          for (const auto& tau : b.odd) {
            const auto r1 = rational_tensor(detail::pad_dual(tau.shape, nR), kappa_t_pad);
            bc.accumulate(g1, f1, q1, r1, sigma.mult * tau.mult);
          }
        }
        unit_total += kunneth(g0, g1);
      }
    }
    for (const auto& [deg, c] : unit_total.degrees()) {
      acc.total.add(deg, c);
      auto [it, inserted] = acc.bigraded.try_emplace({deg, filtration}, c);
      if (!inserted) {
        it->second += c;
        if (it->second.empty()) acc.bigraded.erase(it);
      }
    }
  };

  auto merge = [](E1Page& into, const E1Page& from) {
    into.total += from.total;
    for (const auto& [key, c] : from.bigraded) {
      auto [it, inserted] = into.bigraded.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second.empty()) into.bigraded.erase(it);
      }
    }
  };

  E1Page result{GradedCharacter(m, n), {}, 0};
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(units.size())));
  if (jobs <= 1) {
    for (const auto& u : units) run_unit(u, result);
  } else {
    std::vector<E1Page> partial(static_cast<std::size_t>(jobs), E1Page{GradedCharacter(m, n), {}, 0});
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = static_cast<std::size_t>(w); i < units.size(); i += static_cast<std::size_t>(jobs))
            run_unit(units[i], partial[static_cast<std::size_t>(w)]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& p : partial) merge(result, p);
  }
  result.terms = counter.load();
  return result;
}

// ---------------------------------------------------------------------------
// Closed form

/// H^•(X; O_X) ⊗ S_{[α;β]}(V), placing each Hilbert coefficient of t^{2j} in degree 2j.
inline GradedCharacter main_theorem_char(const BundleSpec& s) {
  const HypothesisCase h = hypothesis_case(s);
  if (h == HypothesisCase::None) throw PreconditionError(kHypothesisError);
  const HilbertSeries hilbert = structure_sheaf_hilbert(s);
  const VirtualCharacter schur =
      h == HypothesisCase::Case1
          ? rational_schur_char(s.alpha, s.beta, s.d)
          : swap_factors(rational_schur_char(transpose(s.alpha), transpose(s.beta), s.d.shifted()));
  GradedCharacter out(s.d.even, s.d.odd);
  for (int k = 0; k <= hilbert.degree(); ++k) {
    const BigInt c = hilbert.coefficient(k);
    if (c != 0) out.add(k, scale(schur, static_cast<Mult>(c)));
  }
  return out;
}

struct VerifyReport {
  HypothesisCase hypothesis = HypothesisCase::None;
  GradedCharacter e1;
  GradedCharacter expected;
  /// degree ↦ e1 - expected, only for degrees where they differ.
  std::map<int, VirtualCharacter> diffs;

  bool ok() const { return diffs.empty(); }
};

/// Compares the E1 page with the closed form degree by degree.
inline VerifyReport verify_main_theorem(const BundleSpec& s, const E1Options& opts = {}) {
  VerifyReport r;
  r.hypothesis = hypothesis_case(s);
  if (r.hypothesis == HypothesisCase::None) throw PreconditionError(kHypothesisError);
  r.expected = main_theorem_char(s);
  r.e1 = e1_page(s, opts).total;
  std::vector<int> degrees;
  for (const auto& [d, c] : r.e1.degrees()) degrees.push_back(d);
  for (const auto& [d, c] : r.expected.degrees()) degrees.push_back(d);
  for (int d : degrees) {
    VirtualCharacter diff = r.e1.at(d) - r.expected.at(d);
    if (!diff.empty()) r.diffs.insert_or_assign(d, std::move(diff));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Partial flags

/// Flag p_1|q_1 < ... < p_r|q_r of subspaces of V with the bundle S_α Q ⊗ S_β(R*)
/// built from the last step.
struct FlagSpec {
  std::vector<std::pair<int, int>> steps;
  SuperDim d;
  Partition alpha;
  Partition beta;

  void validate() const {
    if (steps.empty()) throw PreconditionError("flag needs at least one step");
    auto less = [](std::pair<int, int> a, std::pair<int, int> b) {
      return a.first <= b.first && a.second <= b.second && a != b;
    };
    for (const auto& [p, q] : steps)
      if (p < 0 || q < 0) throw PreconditionError("flag step ranks must be nonnegative");
    for (std::size_t i = 1; i < steps.size(); ++i)
      if (!less(steps[i - 1], steps[i])) throw PreconditionError("flag steps must increase strictly");
    if (!less(steps.back(), {d.even, d.odd})) throw PreconditionError("flag steps must stay below m|n");
  }
};

namespace detail {

// upper ≥ x_r ≥ ... ≥ x_1 ≥ lower.
inline bool chain_holds(const std::vector<int>& xs, int upper, int lower) {
  int prev = upper;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (*it > prev) return false;
    prev = *it;
  }
  return prev >= lower;
}

// Chain condition (1) m - n - a ≥ p_r - q_r ≥ ... ≥ p_1 - q_1 ≥ b, or the
// mirror (2) n - m - a' ≥ q_r - p_r ≥ ... ≥ q_1 - p_1 ≥ b'.
inline HypothesisCase flag_case(const FlagSpec& f, int a, int b, int a_mirror, int b_mirror) {
  f.validate();
  std::vector<int> d1, d2;
  for (const auto& [p, q] : f.steps) {
    d1.push_back(p - q);
    d2.push_back(q - p);
  }
  const int m = f.d.even, n = f.d.odd;
  if (chain_holds(d1, m - n - a, b)) return HypothesisCase::Case1;
  if (chain_holds(d2, n - m - a_mirror, b_mirror)) return HypothesisCase::Case2;
  return HypothesisCase::None;
}

// Block sizes (x_1, x_2 - x_1, ..., N - x_r) of the classical flag carrying
// the cohomology: the odd ranks in Case1, the even ranks in Case2.
inline std::vector<int> flag_blocks(const FlagSpec& f, HypothesisCase h) {
  const bool odd = h == HypothesisCase::Case1;
  std::vector<int> out;
  int prev = 0;
  for (const auto& [p, q] : f.steps) {
    const int x = odd ? q : p;
    out.push_back(x - prev);
    prev = x;
  }
  out.push_back((odd ? f.d.odd : f.d.even) - prev);
  return out;
}

}  // namespace detail

/// Which chain condition holds for the flag and its bundle; Case1 preferred.
inline HypothesisCase flag_hypothesis_case(const FlagSpec& f) {
  return detail::flag_case(f, f.alpha.length(), f.beta.length(), f.alpha.first(), f.beta.first());
}

/// H^•(F; O_F) as the q-multinomial [N]! / ∏ [d_i]! of the matching classical flag.
inline HilbertSeries partial_flag_hilbert(const FlagSpec& f) {
  const HypothesisCase h = detail::flag_case(f, 0, 0, 0, 0);
  if (h == HypothesisCase::None) throw PreconditionError("flag chain condition not satisfied");
  return flag_poincare(detail::flag_blocks(f, h));
}

/**
 * H^•(F; S_α Q ⊗ S_β(R*)) as the free H^•(F; O_F)-module on S_{[α;β]}(V).
 * Also checks that the Hilbert series factors as the product of the
 * Grassmannian series of the successive steps.
 */
inline GradedCharacter partial_flag_char(const FlagSpec& f) {
  const HypothesisCase h = flag_hypothesis_case(f);
  if (h == HypothesisCase::None) throw PreconditionError("flag chain condition not satisfied");
  const std::vector<int> blocks = detail::flag_blocks(f, h);
  const HilbertSeries hilbert = flag_poincare(blocks);

  // A(1) ⊗ ... ⊗ A(r): step i is a Grassmannian of d_i-planes in the
  // remaining (total - marks_{i-1})-dimensional space.
  HilbertSeries product = HilbertSeries::constant(1);
  int remaining = 0;
  for (int b : blocks) remaining += b;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    product = product * grassmannian_poincare(blocks[i], remaining);
    remaining -= blocks[i];
  }
  if (!(product == hilbert)) throw std::logic_error("flag Hilbert series does not factor through its steps");

  const VirtualCharacter schur =
      h == HypothesisCase::Case1
          ? rational_schur_char(f.alpha, f.beta, f.d)
          : swap_factors(rational_schur_char(transpose(f.alpha), transpose(f.beta), f.d.shifted()));
  GradedCharacter out(f.d.even, f.d.odd);
  for (int k = 0; k <= hilbert.degree(); ++k) {
    const BigInt c = hilbert.coefficient(k);
    if (c != 0) out.add(k, scale(schur, static_cast<Mult>(c)));
  }
  return out;
}

}  // namespace superbott
