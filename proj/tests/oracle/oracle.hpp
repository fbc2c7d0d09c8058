#pragma once

// Brute-force reference implementations. They share no code with the LR
// filler or the tensor-product routines and are only linked into tests.

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superbott/character.hpp"
#include "superbott/partition.hpp"
#include "superbott/superschur.hpp"
#include "superbott/types.hpp"

namespace superbott::oracle {

inline constexpr int kMaxShapeSize = 8;

inline void guard(int size) {
  if (size > kMaxShapeSize) throw std::invalid_argument("oracle input too large");
}

/// Row-wise filling of a skew shape. rows[i] covers columns inner[i]..outer[i]-1.
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;
};

/// Calls f(tableau) for every semistandard filling with entries in 1..bound.
template <typename F>
void for_each_ssyt(const SkewShape& shape, int bound, F&& f) {
  guard(shape.size());
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  Tableau t{shape, {}};
  for (int r = 0; r < outer.length(); ++r) t.rows.emplace_back(static_cast<std::size_t>(outer[r] - inner[r]), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[r]; c < outer[r]; ++c) cells.emplace_back(r, c);
  auto at = [&](int r, int c) -> int& { return t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner[r])]; };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      f(static_cast<const Tableau&>(t));
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > inner[r]) lo = std::max(lo, at(r, c - 1));
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = std::max(lo, at(r - 1, c) + 1);
    for (int v = lo; v <= bound; ++v) {
      at(r, c) = v;
      rec(k + 1);
    }
    at(r, c) = 0;
  };
  rec(0);
}

/// Number of semistandard tableaux of the shape with entries ≤ bound.
inline BigInt ssyt_count(const SkewShape& shape, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  BigInt count = 0;
  for_each_ssyt(shape, bound, [&](const Tableau&) { ++count; });
  return count;
}

/// Kostka number K_{λ,a}: chains of horizontal strips of sizes a_1, a_2, ....
inline BigInt kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int a : content) total += a;
  if (total != lambda.size()) return 0;
  std::map<std::pair<Partition, std::size_t>, BigInt> memo;
  // Count ways to grow `cur` to λ using content[k..].
  std::function<BigInt(const Partition&, std::size_t)> rec = [&](const Partition& cur, std::size_t k) -> BigInt {
    if (k == content.size()) return cur == lambda ? BigInt(1) : BigInt(0);
    const auto key = std::make_pair(cur, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt sum = 0;
    // Horizontal strip: new row i length in [cur_i, min(λ_i, cur_{i-1})].
    std::vector<int> next(static_cast<std::size_t>(lambda.length()), 0);
    std::function<void(int, int)> strip = [&](int row, int left) {
      if (row == lambda.length()) {
        if (left == 0) sum += rec(Partition(next), k + 1);
        return;
      }
      const int hi = std::min(lambda[row], row == 0 ? lambda[0] : cur[row - 1]);
      for (int len = cur[row]; len <= hi && len - cur[row] <= left; ++len) {
        next[static_cast<std::size_t>(row)] = len;
        strip(row + 1, left - (len - cur[row]));
      }
    };
    strip(0, content[k]);
    memo.emplace(key, sum);
    return sum;
  };
  return rec(Partition(), 0);
}

/// Full expansion s_λ s_μ = Σ c_ν s_ν by monomial coefficients and elimination.
inline std::map<Partition, BigInt> lr_product_bruteforce(const Partition& lambda, const Partition& mu) {
  guard(lambda.size());
  guard(mu.size());
  const int n = lambda.size() + mu.size();
  auto sorted_parts = [](std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
  };
  // Coefficient of x^κ in s_λ s_μ over ℓ(κ) variables.
  auto monomial_coeff = [&](const Partition& kappa) {
    BigInt total = 0;
    const int len = kappa.length();
    std::vector<int> a(static_cast<std::size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == len) {
        if (left != 0) return;
        std::vector<int> b(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) b[static_cast<std::size_t>(j)] = kappa[j] - a[static_cast<std::size_t>(j)];
        total += kostka(lambda, sorted_parts(a)) * kostka(mu, sorted_parts(b));
        return;
      }
      for (int x = 0; x <= std::min(kappa[i], left); ++x) {
        a[static_cast<std::size_t>(i)] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, lambda.size());
    return total;
  };
  // partitions_of lists in reverse lexicographic order, so every κ that
  // dominates ν has already been solved when ν is reached.
  std::map<Partition, BigInt> coeff;
  for (const Partition& nu : partitions_of(n)) {
    BigInt c = monomial_coeff(nu);
    const std::vector<int> content(nu.parts().begin(), nu.parts().end());
    for (const auto& [kappa, ck] : coeff) c -= ck * kostka(kappa, content);
    if (c != 0) coeff.emplace(nu, c);
  }
  return coeff;
}

inline BigInt lr_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const auto product = lr_product_bruteforce(lambda, mu);
  const auto it = product.find(nu);
  return it == product.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------
// Specialization

namespace detail {
inline Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}
}  // namespace detail

/// Jacobi-Trudi: s_{λ/μ}(values) = det(h_{λ_j - μ_i - j + i}).
inline Rational specialize_schur(const SkewShape& shape, const std::vector<Rational>& values) {
  const Partition& lambda = shape.outer();
  const Partition& mu = shape.inner();
  const int len = lambda.length();
  if (len == 0) return 1;
  const int kmax = lambda.first() + len;
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& x : values)
    for (int k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(len), std::vector<Rational>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      const int k = lambda[j] - mu[i] - j + i;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k < 0 ? Rational(0) : h[static_cast<std::size_t>(k)];
    }
  return detail::det(std::move(m));
}

/// Character value of a rational GL weight: (x_1...x_m)^{-k} s_{w+k}(x).
inline Rational specialize_weight(const GLWeight& w, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != w.rank()) throw std::invalid_argument("rank mismatch");
  const int k = w.last() < 0 ? -w.last() : 0;
  Rational det_power = 1;
  for (const Rational& x : values)
    for (int i = 0; i < k; ++i) det_power /= x;
  return det_power * specialize_schur(SkewShape(w.shifted(k).to_partition()), values);
}

/// det(h_{γ_j - j + i}) · (x_1...x_m)^{-k} for an arbitrary integer sequence γ
/// of length m = values.size(), twisted by k so every entry is nonnegative.
/// For non-dominant γ this straightens to ± a Schur polynomial or to 0.
inline Rational specialize_sequence(const std::vector<int>& gamma, const std::vector<Rational>& values) {
  const int m = static_cast<int>(gamma.size());
  if (static_cast<int>(values.size()) != m) throw std::invalid_argument("rank mismatch");
  if (m == 0) return 1;
  int k = 0;
  for (int g : gamma) k = std::max(k, -g);
  int kmax = 0;
  for (int g : gamma) kmax = std::max(kmax, g + k + m);
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& x : values)
    for (int j = 1; j <= kmax; ++j) h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int idx = gamma[static_cast<std::size_t>(j)] + k - j + i;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
    }
  Rational twist = 1;
  for (const Rational& x : values)
    for (int i = 0; i < k; ++i) twist /= x;
  return twist * detail::det(std::move(a));
}

/// Σ mult · s_{w0}(x) · s_{w1}(y).
inline Rational specialize_character(const VirtualCharacter& c, const EvaluationPoint& pt) {
  Rational total = 0;
  for (const auto& [key, mult] : c.terms())
    total += Rational(mult) * specialize_weight(key.first, pt.even) * specialize_weight(key.second, pt.odd);
  return total;
}

}  // namespace superbott::oracle
