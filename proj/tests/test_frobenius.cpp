#include <gtest/gtest.h>

#include "genfrob/frobenius.hpp"
#include "oracle.hpp"

using namespace genfrob;

namespace {

LatticeBasis full(std::vector<Int> a) { return kernel_basis(WeightVector(std::move(a))); }

}  // namespace

TEST(Frobenius, KnownValues) {
  EXPECT_EQ(frobenius(full({3, 5, 8}), 1), 7);
  EXPECT_EQ(frobenius(full({3, 4, 11}), 3), 17);
  EXPECT_EQ(frobenius(full({3, 5, 8}), 2), 12);
  EXPECT_EQ(frobenius(full({3, 5, 8}), 6), 28);
}

TEST(Frobenius, TwoVariableClosedForm) {
  for (Int k = 1; k <= 10; ++k) {
    EXPECT_EQ(frobenius(full({3, 5}), k), 15 * k - 8);
    EXPECT_EQ(frobenius(full({2, 7}), k), 14 * k - 9);
    EXPECT_EQ(brute_force_frobenius(full({3, 5}), k), 15 * k - 8);
    EXPECT_EQ(brute_force_frobenius(full({2, 7}), k), 14 * k - 9);
  }
  for (Int a1 = 2; a1 <= 9; ++a1)
    for (Int a2 = a1 + 1; a2 <= 13; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      for (Int k = 1; k <= 4; ++k) EXPECT_EQ(frobenius(full({a1, a2}), k), k * a1 * a2 - a1 - a2);
    }
}

TEST(Frobenius, BruteForceAgreesOnKnownValues) {
  EXPECT_EQ(brute_force_frobenius(full({3, 5, 8}), 1), 7);
  EXPECT_EQ(brute_force_frobenius(full({3, 4, 11}), 3), 17);
  EXPECT_EQ(oracle::frobenius({3, 4, 11}, 3), 17);
}

TEST(Frobenius, EverythingCoveredGivesMinusOne) {
  EXPECT_EQ(frobenius(full({1, 4}), 1), -1);
  EXPECT_EQ(brute_force_frobenius(full({1, 4}), 1), -1);
  EXPECT_EQ(frobenius(full({1, 1}), 1), -1);
  EXPECT_EQ(frobenius(full({1, 1}), 3), 1);
}

TEST(Frobenius, Sublattice) {
  // H = <(2,-2)> in (1,1)^perp: degree d carries two classes, split by parity of u1.
  LatticeBasis h(WeightVector({1, 1}), {LatticePoint{2, -2}});
  EXPECT_EQ(frobenius(h, 1), 0);
  EXPECT_EQ(brute_force_frobenius(h, 1), 0);
  LatticeBasis six(WeightVector({3, 4, 11}), {LatticePoint{2, 4, -2}, LatticePoint{12, -9, 0}});
  for (Int k = 1; k <= 4; ++k) EXPECT_EQ(frobenius(six, k), brute_force_frobenius(six, k));
}

TEST(Frobenius, Errors) {
  EXPECT_THROW(frobenius(full({3, 5}), 0), InvalidInput);
  EXPECT_THROW(brute_force_frobenius(full({3, 5}), 0), InvalidInput);
  EXPECT_THROW(frobenius(full({3, 4, 11}), 3, FrobeniusOptions{19}), LimitExceeded);
  EXPECT_EQ(frobenius(full({3, 4, 11}), 3, FrobeniusOptions{200}), 17);
}

TEST(SequenceReport, TwoVariable) {
  auto r = sequence_report(full({3, 5}), 4);
  EXPECT_EQ(r.f_values, (std::vector<Int>{7, 22, 37, 52}));
  EXPECT_EQ(r.f_diffs, (std::vector<Int>{15, 15, 15}));
  EXPECT_EQ(r.dimension, 1u);
  EXPECT_EQ(r.observed_b_set, (std::vector<Int>{7}));
  EXPECT_TRUE(r.bound_checks.all());
}

TEST(SequenceReport, ThreeFiveEight) {
  auto r = sequence_report(full({3, 5, 8}), 6);
  EXPECT_EQ(r.f_values, (std::vector<Int>{7, 12, 17, 22, 25, 28}));
  EXPECT_EQ(r.m_values, (std::vector<Int>{0, 8, 16, 21, 24, 29}));
  EXPECT_EQ(r.b_values, (std::vector<Int>{7, 4, 1, 1, 1, -1}));
  EXPECT_EQ(r.f_diffs, (std::vector<Int>{5, 5, 5, 3, 3}));
  EXPECT_EQ(r.m_diffs, (std::vector<Int>{8, 8, 5, 3, 5}));
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_EQ(r.observed_b_set, (std::vector<Int>{-1, 1, 4, 7}));
  EXPECT_TRUE(r.bound_checks.all());
  EXPECT_THROW(sequence_report(full({3, 5, 8}), 1), InvalidInput);
}
