#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superbott/character.hpp"
#include "superbott/lr.hpp"
#include "superbott/partition.hpp"
#include "superbott/types.hpp"

namespace superbott {

/// Dimension m|n of a super vector space V = V0|V1.
struct SuperDim {
  int even = 0;
  int odd = 0;

  SuperDim() = default;
  SuperDim(int m, int n) : even(m), odd(n) {
    if (m < 0 || n < 0) throw PreconditionError("super dimension must be nonnegative");
  }
  /// V[1]: parity shift.
  SuperDim shifted() const { return {odd, even}; }
  friend bool operator==(const SuperDim&, const SuperDim&) = default;
};

/// Weight (a_1..a_m | a_{m+1}..a_{m+n}) of gl(m|n).
struct SuperWeight {
  std::vector<int> even;
  std::vector<int> odd;
  friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
};

/// Character of S_{λ/κ}(V0|V1) as a GL(V0) × GL(V1) character:
/// Σ_ν c^λ_{κ,ν} Σ_{μ ⊆ ν} S_μ(V0) ⊠ S_{ν^T/μ^T}(V1).
inline VirtualCharacter super_skew_char(const SkewShape& shape, SuperDim d);

/// S_λ(V0|V1) ≅ ⊕_{μ ⊆ λ} S_μ(V0) ⊗ S_{λ^T/μ^T}(V1).
inline VirtualCharacter super_schur_decompose(const Partition& lambda, SuperDim d) {
  VirtualCharacter out(d.even, d.odd);
  const Partition lambda_t = transpose(lambda);
  for (const Partition& mu : subpartitions(lambda)) {
    if (mu.length() > d.even) continue;
    const GLWeight w0 = GLWeight::from_partition(mu, d.even);
    for (const auto& [rho, c] : skew_expand(SkewShape(lambda_t, transpose(mu)))) {
      if (rho.length() > d.odd) continue;
      out.add(w0, GLWeight::from_partition(rho, d.odd), c);
    }
  }
  return out;
}

inline VirtualCharacter super_skew_char(const SkewShape& shape, SuperDim d) {
  VirtualCharacter out(d.even, d.odd);
  for (const auto& [nu, c] : skew_expand(shape)) out += scale(super_schur_decompose(nu, d), c);
  return out;
}

/// One summand S_λ(A) ⊗ S_λ'(B) of a Cauchy decomposition.
struct CauchyTerm {
  Partition left_shape;
  Partition right_shape;
  VirtualCharacter left;
  VirtualCharacter right;
};

namespace detail {
inline std::vector<CauchyTerm> cauchy_terms(int degree, SuperDim a, SuperDim b, bool exterior) {
  std::vector<CauchyTerm> out;
  for (const Partition& lambda : partitions_of(degree)) {
    Partition right = exterior ? transpose(lambda) : lambda;
    VirtualCharacter left_char = super_schur_decompose(lambda, a);
    VirtualCharacter right_char = super_schur_decompose(right, b);
    if (left_char.empty() || right_char.empty()) continue;
    out.push_back({lambda, std::move(right), std::move(left_char), std::move(right_char)});
  }
  return out;
}
}  // namespace detail

/// Sym^d(A ⊗ B) = ⊕_{|λ|=d} S_λ(A) ⊗ S_λ(B); vanishing summands are omitted.
inline std::vector<CauchyTerm> cauchy_sym(int degree, SuperDim a, SuperDim b) {
  return detail::cauchy_terms(degree, a, b, false);
}

/// ⋀^d(A ⊗ B) = ⊕_{|λ|=d} S_λ(A) ⊗ S_{λ^T}(B); vanishing summands are omitted.
inline std::vector<CauchyTerm> cauchy_ext(int degree, SuperDim a, SuperDim b) {
  return detail::cauchy_terms(degree, a, b, true);
}

/// Classical rational Schur functor S_{[α;β]}(C^m): the irreducible with highest
/// weight (α, 0, ..., 0, -β reversed) when ℓ(α) + ℓ(β) ≤ m, zero when
/// ℓ(α) + ℓ(β) = m + 1.
inline std::optional<GLWeight> classical_rational_weight(const Partition& alpha, const Partition& beta, int m) {
  const int la = alpha.length(), lb = beta.length();
  if (la + lb > m + 1) throw PreconditionError("below complete-intersection bound");
  if (la + lb == m + 1) return std::nullopt;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < la; ++i) w[static_cast<std::size_t>(i)] = alpha[i];
  for (int i = 0; i < lb; ++i) w[static_cast<std::size_t>(m - 1 - i)] = -beta[i];
  return GLWeight(std::move(w));
}

/**
 * Character of the rational Schur functor S_{[λ;μ]}(V) restricted to
 * GL(V0) × GL(V1):
 *
 *   ⊕_{α,β,γ,δ} (S_{[α;β]}(V0) ⊗ S_γ(V1*) ⊗ S_δ(V1))^{c^μ_{β,γ^T} c^λ_{α,δ^T}}
 *
 * Requires m ≥ ℓ(λ) + ℓ(μ) - 1.
 */
inline VirtualCharacter rational_schur_char(const Partition& lambda, const Partition& mu, SuperDim d) {
  const int m = d.even, n = d.odd;
  if (m < lambda.length() + mu.length() - 1) throw PreconditionError("below complete-intersection bound");
  VirtualCharacter out(m, n);
  for (const Partition& alpha : subpartitions(lambda)) {
    const PartitionMultiset deltas = skew_expand(SkewShape(lambda, alpha));  // keyed by δ^T
    for (const Partition& beta : subpartitions(mu)) {
      const auto w0 = classical_rational_weight(alpha, beta, m);
      if (!w0) continue;
      const PartitionMultiset gammas = skew_expand(SkewShape(mu, beta));  // keyed by γ^T
      for (const auto& [gamma_t, cg] : gammas) {
        const Partition gamma = transpose(gamma_t);
        if (gamma.length() > n) continue;
        const GLWeight gamma_dual = dual(GLWeight::from_partition(gamma, n));
        for (const auto& [delta_t, cd] : deltas) {
          const Partition delta = transpose(delta_t);
          if (delta.length() > n) continue;
          for (const auto& [w1, c] : rational_tensor(gamma_dual, GLWeight::from_partition(delta, n)))
            out.add(*w0, w1, cg * cd * c);
        }
      }
    }
  }
  return out;
}

/**
 * Signed Laplace-expansion form of the composite supersymmetric Schur
 * character:
 *
 *   Σ_{γ ⊆ q × p} (-1)^{|γ|} [S_{μ/γ}(V*)] [S_{λ/γ^T}(V)]
 *
 * with p ≥ ℓ(λ), q ≥ ℓ(μ) (−1 selects the lengths). Terms with γ ⊄ μ or
 * γ^T ⊄ λ vanish. The output may be virtual.
 */
inline VirtualCharacter composite_euler_char(const Partition& lambda, const Partition& mu, SuperDim d, int p = -1,
                                             int q = -1) {
  if (p < 0) p = lambda.length();
  if (q < 0) q = mu.length();
  if (p < lambda.length() || q < mu.length()) throw PreconditionError("composite_euler_char: need p >= l(lambda), q >= l(mu)");
  VirtualCharacter out(d.even, d.odd);
  for (const Partition& gamma : partitions_in_box(q, p)) {
    const Partition gamma_t = transpose(gamma);
    if (!contains(gamma, mu) || !contains(gamma_t, lambda)) continue;
    const VirtualCharacter dual_part = dual(super_skew_char(SkewShape(mu, gamma), d));
    const VirtualCharacter part = super_skew_char(SkewShape(lambda, gamma_t), d);
    const VirtualCharacter term = tensor(dual_part, part);
    out += gamma.size() % 2 == 0 ? term : scale(term, -1);
  }
  return out;
}

/// Values of the even variables x_1..x_m and odd variables y_1..y_n.
struct EvaluationPoint {
  std::vector<Rational> even;
  std::vector<Rational> odd;
};

namespace detail {

// h_k(x) for k = 0..kmax.
inline std::vector<Rational> complete_homogeneous(const std::vector<Rational>& x, int kmax) {
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& xi : x)
    for (int k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] += xi * h[static_cast<std::size_t>(k - 1)];
  return h;
}

// e_k(y) for k = 0..kmax.
inline std::vector<Rational> elementary(const std::vector<Rational>& y, int kmax) {
  std::vector<Rational> e(static_cast<std::size_t>(kmax) + 1, Rational(0));
  e[0] = 1;
  for (const Rational& yi : y)
    for (int k = kmax; k >= 1; --k) e[static_cast<std::size_t>(k)] += yi * e[static_cast<std::size_t>(k - 1)];
  return e;
}

// Specialized [Sym^k(V)] for k = 0..kmax: Σ_j h_j(x) e_{k-j}(y).
inline std::vector<Rational> super_complete(const EvaluationPoint& pt, int kmax) {
  const auto h = complete_homogeneous(pt.even, kmax);
  const auto e = elementary(pt.odd, kmax);
  std::vector<Rational> out(static_cast<std::size_t>(kmax) + 1, Rational(0));
  for (int k = 0; k <= kmax; ++k)
    for (int j = 0; j <= k; ++j) out[static_cast<std::size_t>(k)] += h[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)];
  return out;
}

inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace detail

/**
 * Determinant det(M|L) specialized at a point, where
 *   M_{i,j} = h̄(μ_{q+1-j} - i + j),  L_{i,j} = h(λ_j + i - q - j),
 * h(k) = [Sym^k V], h̄(k) = [Sym^k V*], h(k) = 0 for k < 0.
 */
inline Rational composite_det_specialized(const Partition& lambda, const Partition& mu, SuperDim d,
                                          const EvaluationPoint& pt, int p = -1, int q = -1) {
  if (static_cast<int>(pt.even.size()) != d.even || static_cast<int>(pt.odd.size()) != d.odd)
    throw PreconditionError("evaluation point does not match the super dimension");
  if (p < 0) p = lambda.length();
  if (q < 0) q = mu.length();
  if (p < lambda.length() || q < mu.length()) throw PreconditionError("composite_det_specialized: need p >= l(lambda), q >= l(mu)");
  EvaluationPoint inv;
  for (const Rational& v : pt.even) {
    if (v == 0) throw PreconditionError("singular evaluation point");
    inv.even.push_back(1 / v);
  }
  for (const Rational& v : pt.odd) {
    if (v == 0) throw PreconditionError("singular evaluation point");
    inv.odd.push_back(1 / v);
  }
  const int size = p + q;
  const int kmax = lambda.first() + mu.first() + size;
  const auto h = detail::super_complete(pt, kmax);
  const auto hbar = detail::super_complete(inv, kmax);
  auto at = [kmax](const std::vector<Rational>& table, int k) -> Rational {
    if (k < 0) return 0;
    if (k > kmax) throw std::logic_error("composite_det_specialized: index out of table");
    return table[static_cast<std::size_t>(k)];
  };
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= q; ++j) mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(hbar, mu[q - j] - i + j);
    for (int j = 1; j <= p; ++j)
      mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q + j - 1)] = at(h, lambda[j - 1] + i - q - j);
  }
  return detail::determinant(std::move(mat));
}

/**
 * Highest weight w(λ;μ) = w(λ) + w(μ*) with respect to the distinguished
 * Borel (even basis vectors first). With t = #{i : μ_i > n} and β_i = μ_i - n:
 *   even part (λ_1, ..., λ_r, 0, ..., 0, -β_t, ..., -β_1)
 *   odd part  (-μ^T_n, ..., -μ^T_1)
 */
inline SuperWeight highest_weight(const Partition& lambda, const Partition& mu, SuperDim d) {
  const int m = d.even, n = d.odd;
  const int r = lambda.length();
  int t = 0;
  while (t < mu.length() && mu[t] > n) ++t;
  if (r + t > m) throw PreconditionError("weight blocks collide");
  SuperWeight w;
  w.even.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < r; ++i) w.even[static_cast<std::size_t>(i)] = lambda[i];
  for (int i = 0; i < t; ++i) w.even[static_cast<std::size_t>(m - 1 - i)] = -(mu[i] - n);
  const Partition mu_t = transpose(mu);
  w.odd.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) w.odd[static_cast<std::size_t>(n - 1 - j)] = -mu_t[j];
  return w;
}

/// m - n ≥ ℓ(λ) + ℓ(μ): the range where S_{[λ;μ]}(V) is irreducible. The
/// trivial functor (λ = μ = ∅) counts for every dimension.
inline bool is_irreducible_case(const Partition& lambda, const Partition& mu, SuperDim d) {
  if (lambda.empty() && mu.empty()) return true;
  return d.even - d.odd >= lambda.length() + mu.length();
}

}  // namespace superbott
