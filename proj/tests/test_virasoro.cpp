#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace virwalk;

namespace {
SchurExpansion worked_expansion() {
  SchurExpansion e;
  e.add(Partition({8, 6, 6, 4, 1, 1}), 7);
  e.add(Partition({7, 7, 6, 4, 1, 1}), 5);
  e.add(Partition({7, 6, 6, 5, 1, 1}), 1);
  e.add(Partition({7, 6, 6, 4, 2, 1}), -3);
  e.add(Partition({7, 6, 6, 4, 1, 1, 1}), -6);
  return e;
}
}  // namespace

TEST(MurnaghanNakayama, Examples) {
  const auto empty = SchurExpansion::basis(Partition());
  SchurExpansion dominoes;
  dominoes.add(Partition({2}), 1);
  dominoes.add(Partition({1, 1}), -1);
  EXPECT_EQ(mn_multiply(2, empty), dominoes);
  SchurExpansion t1s1;
  t1s1.add(Partition({2}), 1);
  t1s1.add(Partition({1, 1}), 1);
  EXPECT_EQ(mn_multiply(1, SchurExpansion::basis(Partition({1}))), t1s1);
  EXPECT_TRUE(mn_multiply(3, SchurExpansion()).is_zero());
  EXPECT_EQ(mn_differentiate(1, SchurExpansion::basis(Partition({1}))), empty);
  EXPECT_TRUE(mn_differentiate(3, SchurExpansion::basis(Partition({1}))).is_zero());
  // s_(2,1) = t1^3/3 - t3 has no t2 dependence
  EXPECT_TRUE(mn_differentiate(2, SchurExpansion::basis(Partition({2, 1}))).is_zero());
  EXPECT_TRUE(schur_polynomial(Partition({2, 1})).derivative(2).is_zero());
  EXPECT_THROW(mn_multiply(0, empty), DomainError);
}

TEST(MurnaghanNakayama, MatchesPolynomialOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_up_to(6)) {
      const auto b = SchurExpansion::basis(l);
      const TPolynomial s = schur_polynomial(l);
      EXPECT_EQ(mn_multiply(n, b), expand_in_schur_basis(power_sum(n) * s)) << n << " " << l.to_string();
      EXPECT_EQ(mn_differentiate(n, b), expand_in_schur_basis(s.derivative(n))) << n << " " << l.to_string();
    }
}

TEST(VirasoroCoefficient, Examples) {
  const Partition lambda{7, 6, 6, 4, 1, 1};
  EXPECT_EQ(virasoro_coefficient(1, lambda, Partition({8, 6, 6, 4, 1, 1})), 7);
  EXPECT_EQ(virasoro_coefficient(1, lambda, Partition({7, 6, 6, 4, 2, 1})), -3);
  EXPECT_EQ(virasoro_coefficient(1, Partition(), Partition({1})), 0);
  EXPECT_TRUE(apply_virasoro_direct(-1, TPolynomial::monomial({})).is_zero());
  // not a border strip: zero by locality
  EXPECT_EQ(virasoro_coefficient(2, Partition({1}), Partition({2, 1})), 0);
  EXPECT_THROW(virasoro_coefficient(0, lambda, lambda), DomainError);
}

// The unpaired i = n/2 term of the half-sum makes even n half-integral:
// V_{-2} 1 = t_1^2 / 2 = (s_2 + s_11) / 2.
TEST(VirasoroCoefficient, IntegralForOddN) {
  EXPECT_EQ(virasoro_coefficient(2, Partition(), Partition({2})), make_rational(1, 2));
  EXPECT_EQ(expand_in_schur_basis(apply_virasoro_direct(-2, TPolynomial::monomial({}))).coefficient(Partition({1, 1})),
            make_rational(1, 2));
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_up_to(6))
      for (const auto& [mu, strip] : addable_border_strips(l, n)) {
        const Rational d = virasoro_coefficient(n, l, mu);
        EXPECT_TRUE(is_integer(d * 2)) << l.to_string() << " -> " << mu.to_string();
        if (n % 2) EXPECT_TRUE(is_integer(d)) << l.to_string() << " -> " << mu.to_string();
      }
}

TEST(VirasoroExpansion, Examples) {
  SchurExpansion three;
  three.add(Partition({2, 1}), 3);
  EXPECT_EQ(apply_virasoro_expansion(0, SchurExpansion::basis(Partition({2, 1}))), three);
  const auto lambda = SchurExpansion::basis(Partition({7, 6, 6, 4, 1, 1}));
  EXPECT_EQ(apply_virasoro_expansion(-1, lambda), worked_expansion());
  EXPECT_EQ(apply_virasoro_expansion(-1, lambda, VirasoroPath::general), worked_expansion());
  EXPECT_TRUE(apply_virasoro_expansion(1, SchurExpansion::basis(Partition({1}))).is_zero());
}

TEST(VirasoroExpansion, FastPathMatchesGeneral) {
  for (const auto& l : partitions_up_to(8))
    for (int k : {-1, 1}) {
      const auto b = SchurExpansion::basis(l);
      EXPECT_EQ(apply_virasoro_expansion(k, b), apply_virasoro_expansion(k, b, VirasoroPath::general)) << l.to_string();
    }
}

TEST(VirasoroExpansion, MatchesPolynomialOracle) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_up_to(6)) {
      const TPolynomial s = schur_polynomial(l);
      for (int k : {-n, n}) {
        const SchurExpansion fast = apply_virasoro_expansion(k, SchurExpansion::basis(l), VirasoroPath::general);
        EXPECT_EQ(fast, expand_in_schur_basis(apply_virasoro_direct(k, s))) << k << " " << l.to_string();
        for (const auto& [mu, c] : fast.coeffs()) {
          const SkewShape shape = k < 0 ? SkewShape(mu, l) : SkewShape(l, mu);
          EXPECT_TRUE(is_border_strip(shape));
          EXPECT_EQ(shape.size(), n);
        }
      }
    }
}
