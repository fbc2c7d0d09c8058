#include <gtest/gtest.h>

#include <functional>

#include "superbott/character.hpp"

using namespace superbott;

namespace {

std::vector<GLWeight> weights(int m, int lo, int hi) {
  std::vector<GLWeight> out;
  std::vector<int> w(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == m) {
      out.emplace_back(w);
      return;
    }
    for (int x = lo; x <= cap; ++x) {
      w[static_cast<std::size_t>(i)] = x;
      rec(i + 1, x);
    }
  };
  rec(0, hi);
  return out;
}

}  // namespace

TEST(GLWeight, Validation) {
  EXPECT_THROW(GLWeight({0, 1}), PreconditionError);
  EXPECT_EQ(GLWeight::from_partition(Partition{2}, 3), (GLWeight{2, 0, 0}));
  EXPECT_EQ(dual(GLWeight{3, 1, -2}), (GLWeight{2, -1, -3}));
  EXPECT_EQ(to_string(GLWeight{1, 0, -1}), "(1,0,-1)");
  EXPECT_EQ(to_string(GLWeight{}), "()");
}

TEST(WeylDim, Examples) {
  EXPECT_EQ(weyl_dim(GLWeight::zero(4)), 1);
  EXPECT_EQ(weyl_dim(GLWeight{1, 0}), 2);
  EXPECT_EQ(weyl_dim(GLWeight{1, 1, 0}), 3);
  EXPECT_EQ(weyl_dim(GLWeight{}), 1);
  EXPECT_EQ(weyl_dim(GLWeight{1, 0, -1}), 8);
  EXPECT_EQ(weyl_dim(GLWeight{2, 0, 0}), 6);
}

TEST(WeylDim, InvariantUnderDetTwistAndDual) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& w : weights(m, -2, 2)) {
      EXPECT_EQ(weyl_dim(w), weyl_dim(w.shifted(3)));
      EXPECT_EQ(weyl_dim(w), weyl_dim(dual(w)));
    }
}

TEST(RationalTensor, Examples) {
  EXPECT_EQ(rational_tensor(GLWeight{2, -1}, GLWeight{0, 0}), (WeightMultiset{{GLWeight{2, -1}, 1}}));
  EXPECT_EQ(rational_tensor(GLWeight{1, 0}, GLWeight{0, -1}),
            (WeightMultiset{{GLWeight{1, -1}, 1}, {GLWeight{0, 0}, 1}}));
  EXPECT_EQ(rational_tensor(GLWeight{1, 0}, GLWeight{1, 0}), (WeightMultiset{{GLWeight{2, 0}, 1}, {GLWeight{1, 1}, 1}}));
  EXPECT_EQ(rational_tensor(GLWeight{}, GLWeight{}), (WeightMultiset{{GLWeight{}, 1}}));
  EXPECT_THROW(rational_tensor(GLWeight{1}, GLWeight{1, 0}), PreconditionError);
}

TEST(RationalTensor, ShiftIndependenceAndDimension) {
  for (int m = 1; m <= 3; ++m) {
    const auto ws = weights(m, -2, 2);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto prod = rational_tensor(a, b);
        EXPECT_EQ(prod, rational_tensor(a, b, 2));
        EXPECT_EQ(prod, rational_tensor(b, a));
        BigInt total = 0;
        for (const auto& [w, c] : prod) total += BigInt(c) * weyl_dim(w);
        EXPECT_EQ(total, weyl_dim(a) * weyl_dim(b));
      }
  }
}

TEST(VirtualCharacter, RingOperations) {
  VirtualCharacter c(2, 1);
  c.add(GLWeight{1, 0}, GLWeight{0}, 1);
  EXPECT_EQ(total_dim(c), 2);
  EXPECT_EQ(c + VirtualCharacter(2, 1), c);
  EXPECT_TRUE((c + scale(c, -1)).empty());
  EXPECT_TRUE(scale(c, 0).empty());
  EXPECT_EQ(total_dim(scale(c, -3)), -6);
  EXPECT_FALSE(scale(c, -1).is_nonnegative());
  EXPECT_THROW(c += VirtualCharacter(3, 1), PreconditionError);
  EXPECT_THROW(c.add(GLWeight{1}, GLWeight{0}, 1), PreconditionError);
}

TEST(VirtualCharacter, NoZeroEntriesStored) {
  VirtualCharacter c(1, 0);
  c.add(GLWeight{1}, GLWeight{}, 2);
  c.add(GLWeight{1}, GLWeight{}, -2);
  EXPECT_TRUE(c.empty());
  c.add(GLWeight{1}, GLWeight{}, 0);
  EXPECT_TRUE(c.terms().empty());
}

TEST(VirtualCharacter, ExternalAndInternalProducts) {
  VirtualCharacter a(2, 0), b(3, 0);
  a.add(GLWeight{1, 0}, GLWeight{}, 1);
  a.add(GLWeight{0, 0}, GLWeight{}, 2);
  b.add(GLWeight{1, 1, 0}, GLWeight{}, 1);
  const auto ab = external_product(a, b);
  EXPECT_EQ(ab.even_rank(), 2);
  EXPECT_EQ(ab.odd_rank(), 3);
  EXPECT_EQ(total_dim(ab), total_dim(a) * total_dim(b));
  EXPECT_THROW(external_product(ab, a), PreconditionError);

  VirtualCharacter v(2, 1);
  v.add(GLWeight{1, 0}, GLWeight{0}, 1);
  v.add(GLWeight{0, 0}, GLWeight{1}, 1);
  const auto vv = tensor(v, v);
  EXPECT_EQ(total_dim(vv), 9);
  EXPECT_EQ(total_dim(tensor(v, dual(v))), 9);
  EXPECT_EQ(swap_factors(swap_factors(vv)), vv);
  EXPECT_EQ(swap_factors(v).even_rank(), 1);
}

TEST(GradedCharacter, DropsEmptyDegrees) {
  GradedCharacter g(1, 0);
  VirtualCharacter c(1, 0);
  c.add(GLWeight{2}, GLWeight{}, 1);
  g.add(3, c);
  g.add(3, scale(c, -1));
  EXPECT_TRUE(g.empty());
  g.add(1, c);
  EXPECT_TRUE(g.has_odd_degree());
  EXPECT_EQ(g.at(1), c);
  EXPECT_TRUE(g.at(0).empty());
  EXPECT_THROW(g.add(-1, c), PreconditionError);
  EXPECT_EQ(total_dim(scale(g, 2)), 2);
}
