#include <gtest/gtest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "superbott/lr.hpp"

using namespace superbott;

namespace {

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST(Oracle, SsytCountExamples) {
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(oracle::ssyt_count(SkewShape(Partition{1}), m), m);
  EXPECT_EQ(oracle::ssyt_count(SkewShape(Partition{1, 1}), 3), 3);
  EXPECT_EQ(oracle::ssyt_count(SkewShape(Partition{2}), 2), 3);
  EXPECT_EQ(oracle::ssyt_count(SkewShape(Partition()), 0), 1);
  EXPECT_EQ(oracle::ssyt_count(SkewShape(Partition{2, 1}, Partition{1}), 2), 4);
  EXPECT_THROW(oracle::ssyt_count(SkewShape(Partition{9}), 2), std::invalid_argument);
}

TEST(Oracle, TableauxAreSemistandard) {
  oracle::for_each_ssyt(SkewShape(Partition{3, 2, 1}, Partition{1}), 3, [](const oracle::Tableau& t) {
    const Partition& o = t.shape.outer();
    const Partition& in = t.shape.inner();
    for (int r = 0; r < o.length(); ++r)
      for (int c = in[r]; c < o[r]; ++c) {
        const int v = t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - in[r])];
        EXPECT_GE(v, 1);
        EXPECT_LE(v, 3);
        if (c > in[r]) {
          EXPECT_LE(t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1 - in[r])], v);
        }
        if (r > 0 && c >= in[r - 1] && c < o[r - 1]) {
          EXPECT_LT(t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - in[r - 1])], v);
        }
      }
  });
}

TEST(Oracle, SsytCountIsWeylDimension) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& lambda : partitions_up_to(5)) {
      if (lambda.length() > m) {
        EXPECT_EQ(oracle::ssyt_count(SkewShape(lambda), m), 0);
        continue;
      }
      EXPECT_EQ(oracle::ssyt_count(SkewShape(lambda), m), weyl_dim(GLWeight::from_partition(lambda, m)));
    }
}

TEST(Oracle, KostkaMatchesEnumeration) {
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& mu : partitions_of(lambda.size())) {
      BigInt count = 0;
      const std::vector<int> content(mu.parts().begin(), mu.parts().end());
      oracle::for_each_ssyt(SkewShape(lambda), mu.length(), [&](const oracle::Tableau& t) {
        std::vector<int> c(content.size(), 0);
        for (const auto& row : t.rows)
          for (int v : row) ++c[static_cast<std::size_t>(v - 1)];
        if (c == content) ++count;
      });
      EXPECT_EQ(oracle::kostka(lambda, content), count);
    }
}

TEST(Oracle, LrBruteforceExamples) {
  EXPECT_EQ(oracle::lr_bruteforce(Partition{2, 1}, Partition(), Partition{2, 1}), 1);
  EXPECT_EQ(oracle::lr_bruteforce(Partition{1}, Partition{1}, Partition{2}), 1);
  EXPECT_EQ(oracle::lr_bruteforce(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
  EXPECT_EQ(oracle::lr_bruteforce(Partition{1}, Partition{1}, Partition{3}), 0);
}

TEST(Oracle, LrBruteforceAgreesWithTableauRule) {
  for (const auto& lambda : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3)) {
      const auto brute = oracle::lr_product_bruteforce(lambda, mu);
      const auto fast = schur_product(lambda, mu, 100);
      ASSERT_EQ(brute.size(), fast.size());
      for (const auto& [nu, c] : fast) EXPECT_EQ(brute.at(nu), c);
    }
}

TEST(Oracle, SpecializeSchurExamples) {
  EXPECT_EQ(oracle::specialize_schur(SkewShape(Partition()), {3, 4}), 1);
  EXPECT_EQ(oracle::specialize_schur(SkewShape(Partition{1}), {1, 1}), 2);
  EXPECT_EQ(oracle::specialize_schur(SkewShape(Partition{2, 1}), {1, 1, 1}), 8);
  EXPECT_EQ(oracle::specialize_schur(SkewShape(Partition{1, 1}), {2, 3}), 6);
}

TEST(Oracle, JacobiTrudiMatchesLrExpansion) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const auto& outer : partitions_up_to(5))
    for (const auto& inner : subpartitions(outer)) {
      std::vector<Rational> x;
      for (int i = 0; i < 3; ++i) x.emplace_back(num(rng), den(rng));
      Rational expansion = 0;
      for (const auto& [nu, c] : skew_expand(SkewShape(outer, inner)))
        expansion += Rational(c) * oracle::specialize_schur(SkewShape(nu), x);
      EXPECT_EQ(oracle::specialize_schur(SkewShape(outer, inner), x), expansion);
    }
}

TEST(Oracle, SpecializeWeightAtOnesIsDimension) {
  for (const auto& w : {GLWeight{1, 0, -1}, GLWeight{0, -2}, GLWeight{3, 1}, GLWeight{}})
    EXPECT_EQ(oracle::specialize_weight(w, std::vector<Rational>(static_cast<std::size_t>(w.rank()), Rational(1))),
              Rational(weyl_dim(w)));
}
