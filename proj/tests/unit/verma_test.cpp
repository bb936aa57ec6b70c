#include <gtest/gtest.h>

#include "semibounded/errors.hpp"
#include "semibounded/verma.hpp"

using namespace semibounded::virasoro;

TEST(Partitions, CountsAndOrder) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(static_cast<int>(partitions(n).size()), counts[n]) << n;
  const auto p3 = partitions(3);
  EXPECT_EQ(p3[0], (Partition{3}));
  EXPECT_EQ(p3[1], (Partition{2, 1}));
  EXPECT_EQ(p3[2], (Partition{1, 1, 1}));
}

TEST(Gram, LevelOneAndSingletons) {
  const Rational c(7, 3), h(5, 4);
  EXPECT_EQ(verma_gram<Rational>(1, c, h)[0][0], Rational(2) * h);
  for (int n = 1; n <= 6; ++n) {
    const auto g = verma_gram<Rational>({Partition{n}}, c, h);
    EXPECT_EQ(g[0][0], Rational(2 * n) * h + c * Rational(n * n * n - n, 12)) << n;
  }
}

TEST(Gram, LevelTwoDeterminantMatchesKacFactor) {
  for (const auto& [c, h] : std::vector<std::pair<Rational, Rational>>{
           {Rational(0), Rational(1)}, {Rational(1, 2), Rational(3, 7)}, {Rational(-4), Rational(2)}}) {
    const Rational expected = Rational(2) * h * (Rational(16) * h * h + Rational(2) * h * c - Rational(10) * h + c);
    EXPECT_EQ(determinant(verma_gram<Rational>(2, c, h)), expected);
  }
  // Ising model weights are level-two null.
  EXPECT_EQ(determinant(verma_gram<Rational>(2, Rational(1, 2), Rational(1, 16))), Rational(0));
  EXPECT_EQ(determinant(verma_gram<Rational>(2, Rational(1, 2), Rational(1, 2))), Rational(0));
}

TEST(Gram, PairDeterminantAtZeroCharge) {
  for (int n = 1; n <= 3; ++n) {
    for (const Rational h : {Rational(1), Rational(3, 5), Rational(7, 2)}) {
      EXPECT_EQ(pair_determinant(n, Rational(0), h), Rational(4 * n * n * n) * h * h * (Rational(8) * h - Rational(5 * n)));
    }
  }
  EXPECT_EQ(pair_determinant(1, Rational(0), Rational(1)), Rational(12));
}

TEST(Gram, SymmetricAndFloatingAgreesWithExact) {
  for (int level = 1; level <= kMaxVermaLevel; ++level) {
    const auto exact = verma_gram<Rational>(level, Rational(3, 2), Rational(2, 3));
    const auto approx = to_matrix(verma_gram<double>(level, 1.5, 2.0 / 3.0));
    const auto converted = to_matrix(exact);
    EXPECT_LT((approx - converted).norm(), 1e-9 * (1.0 + converted.norm()));
    EXPECT_LT((converted - converted.transpose()).norm(), 1e-12);
  }
  EXPECT_THROW(verma_gram<double>(kMaxVermaLevel + 1, 1.0, 1.0), semibounded::DomainError);
}

TEST(Unitarity, ScanExamples) {
  const auto scan = unitarity_scan({0.0, 1.0}, {1.0}, 5);
  ASSERT_EQ(scan.size(), 2u);
  for (const auto& p : scan) {
    if (p.c == 0.0) {
      EXPECT_EQ(p.first_negative_pair, 2);
      EXPECT_GT(p.first_negative_level, 0);
    } else {
      EXPECT_EQ(p.first_negative_level, 0);
      EXPECT_GE(p.min_eigenvalue, -1e-9);
    }
  }
}
