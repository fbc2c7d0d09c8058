#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superbott/partition.hpp"
#include "superbott/types.hpp"

namespace superbott {

/// Sparse map from partitions to nonnegative multiplicities.
using PartitionMultiset = std::map<Partition, Mult>;

namespace detail {

// Fills the cells of outer/inner in reverse reading order (rows top to bottom,
// each row right to left) with a lattice word that is semistandard on the
// shape. Every completed filling is a Littlewood-Richardson tableau; its
// content is the partition it contributes to.
class LRFiller {
 public:
  explicit LRFiller(const SkewShape& shape) : outer_(shape.outer()), inner_(shape.inner()) {
    rows_ = outer_.length();
    grid_.resize(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer_[r]), 0);
    for (int r = 0; r < rows_; ++r)
      for (int c = outer_[r] - 1; c >= inner_[r]; --c) cells_.emplace_back(r, c);
    content_.assign(static_cast<std::size_t>(rows_) + 2, 0);
  }

  PartitionMultiset run() {
    PartitionMultiset out;
    fill(0, out);
    return out;
  }

 private:
  int cell(int r, int c) const { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  void fill(std::size_t k, PartitionMultiset& out) {
    if (k == cells_.size()) {
      std::vector<int> parts;
      for (std::size_t v = 1; v < content_.size() && content_[v] > 0; ++v) parts.push_back(content_[v]);
      ++out[Partition(std::move(parts))];
      return;
    }
    const auto [r, c] = cells_[k];
    int hi = max_used_ + 1;
    if (c + 1 < outer_[r]) hi = std::min(hi, cell(r, c + 1));  // row weakly increases left to right
    int lo = 1;
    if (r > 0 && c >= inner_[r - 1]) lo = cell(r - 1, c) + 1;   // column strictly increases
    hi = std::min(hi, r + 1);
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && content_[static_cast<std::size_t>(v)] + 1 > content_[static_cast<std::size_t>(v - 1)]) continue;
      grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content_[static_cast<std::size_t>(v)];
      const int saved = max_used_;
      max_used_ = std::max(max_used_, v);
      fill(k + 1, out);
      max_used_ = saved;
      --content_[static_cast<std::size_t>(v)];
    }
    grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  }

  Partition outer_, inner_;
  int rows_ = 0;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> content_;
  int max_used_ = 0;
};

struct SkewKeyHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return std::hash<Partition>{}(k.first) * 31u + std::hash<Partition>{}(k.second);
  }
};

// Shared memo for skew expansions. Readers take a shared lock; a miss is
// computed outside the lock and inserted under an exclusive one. Two threads
// racing on the same key compute the same value, so either insert wins.
class SkewCache {
 public:
  static SkewCache& instance() {
    static SkewCache cache;
    return cache;
  }

  PartitionMultiset get(const SkewShape& shape) {
    std::pair<Partition, Partition> key{shape.outer(), shape.inner()};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    PartitionMultiset value = LRFiller(shape).run();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>, PartitionMultiset, SkewKeyHash> table_;
};

}  // namespace detail

/// Expansion of the skew Schur functor S_{outer/inner} into straight shapes:
/// {ν ↦ c^{outer}_{inner,ν}}.
inline PartitionMultiset skew_expand(const SkewShape& shape) {
  if (shape.inner().empty()) return {{shape.outer(), 1}};
  return detail::SkewCache::instance().get(shape);
}

/// Littlewood-Richardson coefficient c^ν_{λ,μ}.
inline Mult lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!contains(lambda, nu) || !contains(mu, nu)) return 0;
  if (!dominates(add_parts(lambda, mu), nu)) return 0;
  const auto table = skew_expand(SkewShape(nu, lambda));
  const auto it = table.find(mu);
  return it == table.end() ? 0 : it->second;
}

/// S_λ ⊗ S_μ = ⊕ c^ν_{λ,μ} S_ν, keeping only ν with ℓ(ν) ≤ max_length.
inline PartitionMultiset schur_product(const Partition& lambda, const Partition& mu, int max_length) {
  if (mu.empty()) return lambda.length() <= max_length ? PartitionMultiset{{lambda, 1}} : PartitionMultiset{};
  if (lambda.empty()) return mu.length() <= max_length ? PartitionMultiset{{mu, 1}} : PartitionMultiset{};
  PartitionMultiset out;
  const int total = lambda.size() + mu.size();
  const int len = std::min(max_length, lambda.length() + mu.length());
  // ν ranges over λ ⊆ ν ⊆ λ + (μ_1, μ_1, ...) of the right size.
  std::vector<int> parts(static_cast<std::size_t>(std::max(len, 0)), 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == len) {
      if (remaining != 0) return;
      Partition nu(parts);
      if (const Mult c = lr_coefficient(lambda, mu, nu); c != 0) out.emplace(std::move(nu), c);
      return;
    }
    const int lo = lambda[static_cast<std::size_t>(row)];
    int hi = lo + mu.first();
    if (row > 0) hi = std::min(hi, parts[static_cast<std::size_t>(row - 1)]);
    hi = std::min(hi, lo + remaining);
    for (int x = lo; x <= hi; ++x) {
      parts[static_cast<std::size_t>(row)] = x;
      rec(row + 1, remaining - (x - lo));
    }
  };
  if (lambda.length() <= len) rec(0, total - lambda.size());
  return out;
}

}  // namespace superbott
