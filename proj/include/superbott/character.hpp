#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superbott/lr.hpp"
#include "superbott/partition.hpp"
#include "superbott/types.hpp"

namespace superbott {

/**
 * Dominant weight of GL(m): a weakly decreasing integer sequence of length m.
 * Negative entries encode duals, e.g. (0,...,0,-1) is the dual of the
 * standard representation. GL(0) has the single empty weight.
 */
class GLWeight {
 public:
  GLWeight() = default;
  GLWeight(std::initializer_list<int> entries) : GLWeight(std::vector<int>(entries)) {}
  explicit GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i] > entries_[i - 1]) throw PreconditionError("GL weight must be weakly decreasing");
  }

  /// Pads λ with zeros to length m.
  static GLWeight from_partition(const Partition& lambda, int m) { return GLWeight(lambda.padded(m)); }
  static GLWeight zero(int m) { return GLWeight(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int rank() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int last() const { return entries_.empty() ? 0 : entries_.back(); }

  bool is_polynomial() const { return entries_.empty() || entries_.back() >= 0; }
  Partition to_partition() const {
    if (!is_polynomial()) throw PreconditionError("weight has negative entries");
    return Partition(entries_);
  }

  /// Twist by det^k.
  GLWeight shifted(int k) const {
    std::vector<int> out(entries_);
    for (int& x : out) x += k;
    return GLWeight(std::move(out));
  }

  friend auto operator<=>(const GLWeight&, const GLWeight&) = default;
  friend bool operator==(const GLWeight&, const GLWeight&) = default;

 private:
  std::vector<int> entries_;
};

/// Highest weight of the dual representation: negate and reverse.
inline GLWeight dual(const GLWeight& w) {
  std::vector<int> out(w.entries().rbegin(), w.entries().rend());
  for (int& x : out) x = -x;
  return GLWeight(std::move(out));
}

inline std::string to_string(const GLWeight& w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

/// Weyl dimension formula ∏_{i<j} (w_i - w_j + j - i)/(j - i).
inline BigInt weyl_dim(const GLWeight& w) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

using WeightMultiset = std::map<GLWeight, Mult>;

namespace detail {

class TensorCache {
 public:
  static TensorCache& instance() {
    static TensorCache cache;
    return cache;
  }
  template <typename Compute>
  WeightMultiset get(const GLWeight& a, const GLWeight& b, Compute&& compute) {
    std::pair<GLWeight, GLWeight> key{a, b};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    WeightMultiset value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<GLWeight, GLWeight>, WeightMultiset> table_;
};

inline WeightMultiset rational_tensor_uncached(const GLWeight& a, const GLWeight& b, int extra_shift) {
  const int m = a.rank();
  const int ka = std::max(0, -a.last()) + extra_shift;
  const int kb = std::max(0, -b.last()) + extra_shift;
  WeightMultiset out;
  for (const auto& [nu, c] : schur_product(a.shifted(ka).to_partition(), b.shifted(kb).to_partition(), m))
    out.emplace(GLWeight::from_partition(nu, m).shifted(-ka - kb), c);
  return out;
}

}  // namespace detail

/**
 * Decomposition of the tensor product of two rational GL(m) irreducibles.
 * Both weights are twisted by a power of det until polynomial, multiplied
 * with Littlewood-Richardson truncated to m rows, then twisted back.
 * `extra_shift` adds to both twists; the result does not depend on it.
 */
inline WeightMultiset rational_tensor(const GLWeight& a, const GLWeight& b, int extra_shift = 0) {
  if (a.rank() != b.rank()) throw PreconditionError("rational_tensor: rank mismatch");
  if (a.rank() == 0) return {{GLWeight{}, 1}};
  if (extra_shift != 0) return detail::rational_tensor_uncached(a, b, extra_shift);
  return detail::TensorCache::instance().get(a, b, [&] { return detail::rational_tensor_uncached(a, b, 0); });
}

// ---------------------------------------------------------------------------

/**
 * Virtual character of GL(m) × GL(n): a finitely supported map from pairs of
 * dominant weights to signed multiplicities. Zero entries are never stored.
 * A character of GL(m) alone is a VirtualCharacter with n = 0.
 */
class VirtualCharacter {
 public:
  using Key = std::pair<GLWeight, GLWeight>;
  using Terms = std::map<Key, Mult>;

  VirtualCharacter() = default;
  VirtualCharacter(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw PreconditionError("negative rank");
  }

  static VirtualCharacter trivial(int m, int n) {
    VirtualCharacter c(m, n);
    c.add(GLWeight::zero(m), GLWeight::zero(n), 1);
    return c;
  }

  int even_rank() const { return m_; }
  int odd_rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const GLWeight& w0, const GLWeight& w1, Mult c) {
    if (w0.rank() != m_ || w1.rank() != n_) throw PreconditionError("weight length does not match character ranks");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{w0, w1}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Mult multiplicity(const GLWeight& w0, const GLWeight& w1) const {
    const auto it = terms_.find(Key{w0, w1});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  VirtualCharacter& operator+=(const VirtualCharacter& other) {
    check_ranks(other);
    for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
    return *this;
  }
  VirtualCharacter& operator-=(const VirtualCharacter& other) {
    check_ranks(other);
    for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

 private:
  void check_ranks(const VirtualCharacter& other) const {
    if (other.m_ != m_ || other.n_ != n_) throw PreconditionError("character rank mismatch");
  }

  int m_ = 0;
  int n_ = 0;
  Terms terms_;
};

inline VirtualCharacter scale(const VirtualCharacter& c, Mult k) {
  VirtualCharacter out(c.even_rank(), c.odd_rank());
  if (k == 0) return out;
  for (const auto& [key, mult] : c.terms()) out.add(key.first, key.second, mult * k);
  return out;
}

/// Σ mult · dim(w0) · dim(w1); negative for some virtual characters.
inline BigInt total_dim(const VirtualCharacter& c) {
  BigInt total = 0;
  for (const auto& [key, mult] : c.terms()) total += BigInt(mult) * weyl_dim(key.first) * weyl_dim(key.second);
  return total;
}

/// a ⊠ b for a over GL(m) and b over GL(n) (both with odd rank 0).
inline VirtualCharacter external_product(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.odd_rank() != 0 || b.odd_rank() != 0)
    throw PreconditionError("external_product expects characters of a single GL factor");
  VirtualCharacter out(a.even_rank(), b.even_rank());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add(ka.first, kb.first, ca * cb);
  return out;
}

/// Internal tensor product of two GL(m) × GL(n) characters.
inline VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.even_rank() != b.even_rank() || a.odd_rank() != b.odd_rank())
    throw PreconditionError("character rank mismatch");
  VirtualCharacter out(a.even_rank(), a.odd_rank());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto even = rational_tensor(ka.first, kb.first);
      const auto odd = rational_tensor(ka.second, kb.second);
      for (const auto& [w0, c0] : even)
        for (const auto& [w1, c1] : odd) out.add(w0, w1, ca * cb * c0 * c1);
    }
  return out;
}

/// Character of the dual representation (both factors dualized).
inline VirtualCharacter dual(const VirtualCharacter& c) {
  VirtualCharacter out(c.even_rank(), c.odd_rank());
  for (const auto& [key, mult] : c.terms()) out.add(dual(key.first), dual(key.second), mult);
  return out;
}

/// Exchanges the two factors: a GL(m) × GL(n) character becomes GL(n) × GL(m).
inline VirtualCharacter swap_factors(const VirtualCharacter& c) {
  VirtualCharacter out(c.odd_rank(), c.even_rank());
  for (const auto& [key, mult] : c.terms()) out.add(key.second, key.first, mult);
  return out;
}

// ---------------------------------------------------------------------------

/// Cohomology-style graded character: degree ↦ VirtualCharacter, all sharing
/// the same ranks. Degrees with an empty character are dropped.
class GradedCharacter {
 public:
  GradedCharacter() = default;
  GradedCharacter(int m, int n) : m_(m), n_(n) {}

  int even_rank() const { return m_; }
  int odd_rank() const { return n_; }
  const std::map<int, VirtualCharacter>& degrees() const { return by_degree_; }
  bool empty() const { return by_degree_.empty(); }

  void add(int degree, const VirtualCharacter& c) {
    if (c.even_rank() != m_ || c.odd_rank() != n_) throw PreconditionError("character rank mismatch");
    if (degree < 0) throw PreconditionError("negative cohomological degree");
    if (c.empty()) return;
    auto [it, inserted] = by_degree_.try_emplace(degree, c);
    if (!inserted) {
      it->second += c;
      if (it->second.empty()) by_degree_.erase(it);
    }
  }
  GradedCharacter& operator+=(const GradedCharacter& other) {
    for (const auto& [d, c] : other.by_degree_) add(d, c);
    return *this;
  }

  /// Character in one degree (empty if none).
  VirtualCharacter at(int degree) const {
    const auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? VirtualCharacter(m_, n_) : it->second;
  }

  bool has_odd_degree() const {
    return std::any_of(by_degree_.begin(), by_degree_.end(), [](const auto& e) { return e.first % 2 != 0; });
  }

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::map<int, VirtualCharacter> by_degree_;
};

inline GradedCharacter scale(const GradedCharacter& g, Mult k) {
  GradedCharacter out(g.even_rank(), g.odd_rank());
  for (const auto& [d, c] : g.degrees()) out.add(d, scale(c, k));
  return out;
}

inline BigInt total_dim(const GradedCharacter& g) {
  BigInt total = 0;
  for (const auto& [d, c] : g.degrees()) total += total_dim(c);
  return total;
}

}  // namespace superbott
