#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "superbott/types.hpp"

namespace superbott {

/// Integer polynomial in t, stored densely by degree without trailing zeros.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static HilbertSeries constant(BigInt c) { return HilbertSeries(std::vector<BigInt>{std::move(c)}); }
  static HilbertSeries monomial(int degree, BigInt c = 1) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = std::move(c);
    return HilbertSeries(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int k) const {
    return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : BigInt(0);
  }
  std::span<const BigInt> coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return HilbertSeries(std::move(out));
  }

  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return HilbertSeries(std::move(out));
  }

  /// Exact quotient a / b. A nonzero remainder or non-integral coefficient
  /// means the caller's identity is wrong, so it throws std::logic_error.
  friend HilbertSeries exact_divide(const HilbertSeries& a, const HilbertSeries& b) {
    if (b.is_zero()) throw std::logic_error("polynomial division by zero");
    if (a.is_zero()) return {};
    std::vector<BigInt> rem(a.coeffs_);
    const int db = b.degree();
    if (a.degree() < db) throw std::logic_error("inexact polynomial division");
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const BigInt& lead = b.coeffs_.back();
    for (int k = a.degree() - db; k >= 0; --k) {
      BigInt& top = rem[static_cast<std::size_t>(k + db)];
      if (top % lead != 0) throw std::logic_error("inexact polynomial division");
      const BigInt c = top / lead;
      q[static_cast<std::size_t>(k)] = c;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; }))
      throw std::logic_error("inexact polynomial division");
    return HilbertSeries(std::move(q));
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

/// "1 + t^2 + 2 t^4"; "0" for the zero polynomial.
inline std::string to_string(const HilbertSeries& h) {
  if (h.is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= h.degree(); ++k) {
    BigInt c = h.coefficient(k);
    if (c == 0) continue;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (k == 0) {
      s += c.str();
      continue;
    }
    if (c != 1) s += c.str() + " ";
    s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return s;
}

/// [i] = 1 + t^2 + ... + t^{2i-2}; [0] = 0.
inline HilbertSeries q_int(int i) {
  if (i < 0) throw PreconditionError("q_int: negative argument");
  std::vector<BigInt> c(i > 0 ? static_cast<std::size_t>(2 * i - 1) : 0, 0);
  for (int k = 0; k < i; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
  return HilbertSeries(std::move(c));
}

/// [i]! = [i][i-1]...[1]; [0]! = 1.
inline HilbertSeries q_factorial(int i) {
  if (i < 0) throw PreconditionError("q_factorial: negative argument");
  HilbertSeries out = HilbertSeries::constant(1);
  for (int k = 2; k <= i; ++k) out = out * q_int(k);
  return out;
}

/// Poincaré polynomial of the partial flag variety with block sizes d:
/// [n]! / ([d_1]! ... [d_r]!), n = Σ d_i.
inline HilbertSeries flag_poincare(std::span<const int> dvec) {
  int n = 0;
  HilbertSeries den = HilbertSeries::constant(1);
  for (int d : dvec) {
    if (d < 0) throw PreconditionError("flag_poincare: negative block size");
    n += d;
    den = den * q_factorial(d);
  }
  return exact_divide(q_factorial(n), den);
}

/// Poincaré polynomial of Gr(q, C^n) from the product formula
/// ∏_{i=q+1}^{n} (t^{2i} - 1) / ∏_{i=1}^{n-q} (t^{2i} - 1).
inline HilbertSeries grassmannian_poincare(int q, int n) {
  if (q < 0 || q > n) throw PreconditionError("grassmannian_poincare: need 0 <= q <= n");
  auto factor = [](int i) { return HilbertSeries::monomial(2 * i) + HilbertSeries::constant(-1); };
  HilbertSeries num = HilbertSeries::constant(1), den = HilbertSeries::constant(1);
  for (int i = q + 1; i <= n; ++i) num = num * factor(i);
  for (int i = 1; i <= n - q; ++i) den = den * factor(i);
  return exact_divide(num, den);
}

/// Rank n!/(d_1! ... d_r!) of the factorization ring.
inline BigInt fact_ring_rank(std::span<const int> dvec) {
  BigInt num = 1, den = 1;
  int n = 0;
  for (int d : dvec) {
    if (d < 0) throw PreconditionError("fact_ring_rank: negative block size");
    for (int k = 1; k <= d; ++k) {
      ++n;
      num *= n;
      den *= k;
    }
  }
  return num / den;
}

/// Codimension a1·a2 + c1·a2 + a1·c2 of the complete intersection cut out by
/// the compositions, valid when a1 + a2 + max(c1, c2) ≤ b.
inline long long ci_codim(int a1, int a2, int b, int c1, int c2) {
  if (a1 < 0 || a2 < 0 || b < 0 || c1 < 0 || c2 < 0) throw PreconditionError("ci_codim: negative dimension");
  if (a1 + a2 + std::max(c1, c2) > b) throw PreconditionError("not a complete intersection regime");
  return 1LL * a1 * a2 + 1LL * c1 * a2 + 1LL * a1 * c2;
}

}  // namespace superbott
