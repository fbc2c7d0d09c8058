#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superbott/types.hpp"

namespace superbott {

/**
 * Integer partition stored without trailing zeros.
 *
 * Construction accepts trailing zeros and strips them, so two partitions
 * compare equal exactly when their Young diagrams coincide. The empty
 * partition is a valid value everywhere.
 */
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw ParseError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ParseError("partition parts must be weakly decreasing");
    }
  }

  /// |λ|
  int size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
  }
  /// ℓ(λ), the number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); parts beyond the length read as 0.
  int operator[](int i) const { return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  std::span<const int> parts() const { return parts_; }

  /// Parts padded with zeros to `len` entries. Throws if the partition is longer.
  std::vector<int> padded(int len) const {
    if (length() > len) throw PreconditionError("partition longer than requested padding");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(len), 0);
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition transpose(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int i = 0; i < lambda.first(); ++i) {
    int count = 0;
    while (count < lambda.length() && lambda[count] > i) ++count;
    out[static_cast<std::size_t>(i)] = count;
  }
  return Partition(std::move(out));
}

/// inner ⊆ outer in the inclusion order.
inline bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

/// mu ≤ lambda in dominance order. Only partitions of equal size compare.
inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw PreconditionError("incomparable sizes");
  int sl = 0, sm = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sm > sl) return false;
  }
  return true;
}

/// Componentwise sum λ + μ.
inline Partition add_parts(const Partition& a, const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Partition(std::move(out));
}

/// Skew shape outer/inner with inner ⊆ outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_)) throw PreconditionError("skew shape inner is not contained in outer");
  }
  explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

// ---------------------------------------------------------------------------
// Enumeration

/// Calls f(λ) for each partition of n with ℓ(λ) ≤ max_len and λ_1 ≤ max_part,
/// in reverse lexicographic order.
template <typename F>
void for_each_partition(int n, int max_len, int max_part, F&& f) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      f(Partition(parts));
      return;
    }
    if (static_cast<int>(parts.size()) >= max_len) return;
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      parts.push_back(x);
      rec(remaining - x, x);
      parts.pop_back();
    }
  };
  if (n < 0) return;
  rec(n, max_part);
}

inline std::vector<Partition> partitions_of(int n, int max_len = std::numeric_limits<int>::max(),
                                            int max_part = std::numeric_limits<int>::max()) {
  std::vector<Partition> out;
  for_each_partition(n, max_len, max_part, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

/// All partitions fitting in a rows × cols rectangle, any size.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) return out;
  for (int n = 0; n <= rows * cols; ++n)
    for_each_partition(n, rows, cols, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

/// All μ ⊆ λ.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(lambda.length()), 0);
  std::function<void(int)> rec = [&](int row) {
    if (row == lambda.length()) {
      out.emplace_back(parts);
      return;
    }
    const int cap = row == 0 ? lambda[0] : std::min(lambda[row],
                                                    parts[static_cast<std::size_t>(row - 1)]);
    for (int x = 0; x <= cap; ++x) {
      parts[static_cast<std::size_t>(row)] = x;
      rec(row + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "[3,1]" and "[]" for the empty partition.

inline std::string to_string(const Partition& lambda) {
  std::string s = "[";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[i]);
  }
  return s + "]";
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (text.substr(pos).empty()) return out;
  while (true) {
    skip_ws();
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an integer in '" + std::string(text) + "'");
    pos += static_cast<std::size_t>(ptr - begin);
    out.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in '" + std::string(text) + "'");
    ++pos;
  }
  return out;
}

/// Parses "[3,1]", "[]" or the bare form "3,1".
inline Partition parse_partition(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unbalanced brackets in partition '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  return Partition(parse_int_list(text));
}

}  // namespace superbott

template <>
struct std::hash<superbott::Partition> {
  std::size_t operator()(const superbott::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
