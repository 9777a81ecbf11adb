#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace virwalk;

namespace {
WalkerConfig W(std::initializer_list<int> v) { return WalkerConfig(std::vector<int>(v)); }
}  // namespace

TEST(Walks, DpExamples) {
  EXPECT_EQ(count_walks_dp({1, 1}, W({0}), W({1}), 1), 1);
  EXPECT_EQ(count_walks_dp({1, 2}, W({0, 1}), W({0, 1}), 2), 2);
  EXPECT_EQ(count_walks_dp({2, 1, 0, 1}, W({0}), W({0}), 1), 1);
  EXPECT_EQ(count_walks_dp({1, 2}, W({1, 0}), W({0, 1}), 2), 0);
  EXPECT_EQ(count_walks_dp({3, 1, 1, 1}, W({0}), W({0}), 0), 1);
  EXPECT_THROW(count_walks_dp({1, 2}, W({0}), W({0, 1}), 2), DomainError);
  EXPECT_THROW(count_walks_dp({4, 1}, W({0}), W({0}), 1), DomainError);
}

TEST(Walks, TableauxExamples) {
  EXPECT_EQ(count_walks_tableaux({1, 1}, W({0}), W({1}), 1), 1);
  EXPECT_EQ(count_walks_tableaux({1, 2}, W({0, 1}), W({0, 1}), 2), 2);
  EXPECT_EQ(count_walks_tableaux({2, 1, 0, 1}, W({0}), W({0}), 1), 1);
  EXPECT_EQ(count_walks_tableaux({3, 2, 2, 3}, W({0, 3}), W({0, 3}), 0), 1);
}

TEST(Walks, ReflectionExamples) {
  EXPECT_EQ(count_walks_reflection(W({0}), W({0}), 2), 2);
  EXPECT_EQ(count_walks_reflection(W({0, 1}), W({0, 1}), 2), 2);
  EXPECT_EQ(count_walks_reflection(W({0, 1}), W({1, 2}), 1), 0);
}

TEST(Walks, CloselyPackedReturn) {
  // C(2,1) sum over lambda |- 1 of (f^lambda)^2
  const WalkerConfig x = W({0, 1});
  EXPECT_EQ(count_walks_dp({1, 2}, x, x, 2), 2);
  EXPECT_EQ(count_walks_tableaux({1, 2}, x, x, 2), 2);
  EXPECT_EQ(transition_probability(x, x, 2, 2), make_rational(1, 8));
}

TEST(Walks, ProbabilityExamples) {
  EXPECT_EQ(transition_probability(W({0}), W({0}), 2, 1), make_rational(1, 2));
  EXPECT_EQ(transition_probability(W({0, 2}), W({0, 2}), 0, 2), 1);
}

TEST(Walks, GeneratingSeriesExamples) {
  EXPECT_EQ(generating_series({1, 1}, W({0}), W({0}), 4), ZSeries(4, {1, 0, 1, 0, make_rational(1, 4)}));
  EXPECT_EQ(generating_series({3, 1, 1, 1}, W({0}), W({0}), 2), ZSeries(2, {1, 0, 1}));
  for (int c = 1; c <= 3; ++c) {
    const WalkModel m{c, 2, 2, 1};
    EXPECT_EQ(generating_series(m, W({0, 2}), W({0, 2}), 0), ZSeries::constant(0, 1));
    // case 2's right phase moves walkers without counting towards k
    const Rational off = c == 2 ? 1 : 0;
    EXPECT_EQ(generating_series(m, W({0, 2}), W({1, 2}), 0), ZSeries::constant(0, off));
    EXPECT_EQ(count_walks_dp(m, W({0, 2}), W({1, 2}), 0), off);
  }
}

TEST(Walks, CaseOneMatchesEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : configs_in_window(n, 0, 4))
      for (const auto& y : configs_in_window(n, 0, 4))
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(count_walks_dp({1, n}, x, y, k), oracle::enumerate_case1(x, y, k));
}

TEST(Walks, CaseTwoMatchesEnumeration) {
  for (int n = 1; n <= 2; ++n)
    for (int q = 0; q <= 2; ++q)
      for (const auto& x : configs_in_window(n, 0, 3))
        for (const auto& y : configs_in_window(n, 0, 4))
          for (int k = 0; k <= 3; ++k)
            EXPECT_EQ(count_walks_dp({2, n, 0, q}, x, y, k), oracle::enumerate_case2(x, y, q, k));
}

TEST(Walks, CaseThreeMatchesEnumeration) {
  for (int n = 1; n <= 2; ++n)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (const auto& x : configs_in_window(n, 0, 3))
          for (const auto& y : configs_in_window(n, 0, 3))
            for (int k = 0; k <= 4; ++k)
              EXPECT_EQ(count_walks_dp({3, n, p, q}, x, y, k), oracle::enumerate_case3_raw(x, y, p, q, k) * factorial(k));
}

TEST(Walks, CaseOneFourWayAgreement) {
  for (int n = 1; n <= 3; ++n) {
    const WalkModel m{1, n};
    for (const auto& x : configs_in_window(n, 0, 5))
      for (const auto& y : configs_in_window(n, 0, 5))
        for (int k = 0; k <= 5; ++k) {
          const BigInt dp = count_walks_dp(m, x, y, k);
          EXPECT_EQ(count_walks_tableaux(m, x, y, k), dp) << x.to_string() << " " << y.to_string() << " " << k;
          EXPECT_EQ(count_walks_reflection(x, y, k), dp);
          EXPECT_EQ(count_walks_series(m, x, y, k), dp);
        }
  }
}

TEST(Walks, CasesTwoThreeAgreement) {
  for (int c = 2; c <= 3; ++c)
    for (int n = 1; n <= 2; ++n)
      for (int p = 0; p <= (c == 3 ? 3 : 0); ++p)
        for (int q = 0; q <= 3; ++q) {
          const WalkModel m{c, n, p, q};
          for (const auto& x : configs_in_window(n, 0, 4))
            for (const auto& y : configs_in_window(n, 0, 4))
              for (int k = 0; k <= 4; ++k) {
                const BigInt dp = count_walks_dp(m, x, y, k);
                EXPECT_EQ(count_walks_tableaux(m, x, y, k), dp);
                EXPECT_EQ(count_walks_series(m, x, y, k), dp);
              }
        }
}

TEST(Walks, WeylExtractionMatchesOtherFormulas) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : configs_in_window(n, 0, 3))
      for (const auto& y : configs_in_window(n, 0, 3))
        for (int T = 0; T <= 5; ++T) {
          const BigInt weyl = oracle::weyl_extraction(x, y, T);
          EXPECT_EQ(count_walks_reflection(x, y, T), weyl);
          EXPECT_EQ(count_walks_tableaux({1, n}, x, y, T), weyl);
        }
}

TEST(Walks, CaseOneParityAndReach) {
  for (const auto& x : configs_in_window(2, 0, 4))
    for (const auto& y : configs_in_window(2, 0, 4)) {
      const int d = y.sum() - x.sum();
      for (int k = 0; k <= 5; ++k)
        if ((k - d) % 2 != 0 || k < std::abs(d)) EXPECT_EQ(count_walks_dp({1, 2}, x, y, k), 0);
    }
}

TEST(Walks, CountTableLookups) {
  const WalkModel m{1, 2};
  const auto table = build_count_table(m, configs_in_window(2, 0, 3), 3, 2);
  EXPECT_EQ(table.at(2, W({0, 1}), W({0, 1})), 2);
  EXPECT_EQ(table.at(-1, W({0, 1}), W({0, 1})), 0);
  EXPECT_EQ(table.at(2, W({1, 1}), W({0, 1})), 0);
  EXPECT_THROW(table.at(2, W({0, 7}), W({0, 1})), IncompleteTableError);
  EXPECT_THROW(table.at(4, W({0, 1}), W({0, 1})), IncompleteTableError);
  const ProbabilityTable P(table);
  EXPECT_EQ(P.at(2, W({0, 1}), W({0, 1})), make_rational(1, 8));
  // thread count does not change the table
  const auto serial = build_count_table(m, configs_in_window(2, 0, 3), 3, 1);
  EXPECT_EQ(serial.rows(), table.rows());
}
