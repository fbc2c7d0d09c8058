#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superbott/character.hpp"
#include "superbott/partition.hpp"

namespace superbott {

struct BottResult {
  int degree = 0;
  GLWeight weight;
  friend bool operator==(const BottResult&, const BottResult&) = default;
};

/**
 * Borel-Weil-Bott for GL(m) with ρ = (m-1, ..., 1, 0).
 *
 * v = γ + ρ. A repeated entry in v means every cohomology group vanishes.
 * Otherwise the only nonzero group sits in degree equal to the number of
 * inversions of v, with highest weight sort(v) - ρ.
 */
inline std::optional<BottResult> bott(std::span<const int> gamma) {
  const int m = static_cast<int>(gamma.size());
  std::vector<int> v(gamma.begin(), gamma.end());
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] += m - 1 - i;
  // Insertion sort into strictly decreasing order, counting swaps.
  int inversions = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] <= v[j]; --j) {
      if (v[j - 1] == v[j]) return std::nullopt;
      std::swap(v[j - 1], v[j]);
      ++inversions;
    }
  }
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] -= m - 1 - i;
  return BottResult{inversions, GLWeight(std::move(v))};
}

/**
 * Weight of an irreducible homogeneous bundle on Gr(p, C^m), split along the
 * Levi GL(m-p) × GL(p): q_block acts on the quotient Q, r_block on the
 * tautological subbundle R. Each block is dominant; their concatenation
 * need not be.
 */
struct LeviWeight {
  GLWeight q_block;
  GLWeight r_block;
  friend auto operator<=>(const LeviWeight&, const LeviWeight&) = default;
  friend bool operator==(const LeviWeight&, const LeviWeight&) = default;
};

/// Full GL(m) weight of a Levi weight: quotient block first, sub block last.
inline std::vector<int> levi_to_full(const LeviWeight& w, int p, int m) {
  if (w.q_block.rank() != m - p || w.r_block.rank() != p)
    throw PreconditionError("Levi weight block lengths do not match Gr(p, m)");
  std::vector<int> out(w.q_block.entries().begin(), w.q_block.entries().end());
  out.insert(out.end(), w.r_block.entries().begin(), w.r_block.entries().end());
  return out;
}

/// Levi weight of S_α Q ⊗ S_β(R*) on Gr(p, C^m), or nullopt if the bundle is zero.
inline std::optional<LeviWeight> schur_bundle_weight(const Partition& alpha, const Partition& beta, int p, int m) {
  if (alpha.length() > m - p || beta.length() > p) return std::nullopt;
  return LeviWeight{GLWeight::from_partition(alpha, m - p), dual(GLWeight::from_partition(beta, p))};
}

using LeviMultiset = std::map<LeviWeight, Mult>;

/// Cohomology of Σ mult · E(w) on Gr(p, C^m) as a graded GL(m) character.
inline GradedCharacter grassmannian_cohomology(int p, int m, const LeviMultiset& terms) {
  GradedCharacter out(m, 0);
  for (const auto& [w, mult] : terms) {
    const auto full = levi_to_full(w, p, m);
    if (const auto r = bott(full)) {
      VirtualCharacter c(m, 0);
      c.add(r->weight, GLWeight{}, mult);
      out.add(r->degree, c);
    }
  }
  return out;
}

/// Künneth formula: degree k of the result is Σ_{i+j=k} a_i ⊠ b_j.
inline GradedCharacter kunneth(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter out(a.even_rank(), b.even_rank());
  for (const auto& [da, ca] : a.degrees())
    for (const auto& [db, cb] : b.degrees()) out.add(da + db, external_product(ca, cb));
  return out;
}

}  // namespace superbott
