#include "conlag/integrate.hpp"
#include "conlag/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using conlag::ExpPoly;
using conlag::Rational;
using conlag::ReducedPoly;

TEST(MomentExact, Examples) {
  EXPECT_EQ(conlag::moment_exact(ExpPoly::exp(-1)), 1);
  EXPECT_EQ(conlag::moment_exact(ExpPoly(ReducedPoly({0, 0, 1}), -1)), 2);
  EXPECT_EQ(conlag::moment_exact(ExpPoly::exp(Rational(-1, 2))), 2);
}

TEST(MomentExact, GeneratingKernelOfOrthogonality) {
  // c = 1 + t/(1-t) + s/(1-s); int e^(-c u) du = 1/c and
  // 1/((1-t)(1-s)) * 1/c = 1/(1 - s t).
  for (const Rational& t : {Rational(1, 3), Rational(-1, 4), Rational(2, 5)})
    for (const Rational& s : {Rational(1, 2), Rational(1, 7)}) {
      const Rational c = 1 + t / (1 - t) + s / (1 - s);
      const Rational kernel = conlag::moment_exact(ExpPoly::exp(-c));
      EXPECT_EQ(kernel, 1 / c);
      EXPECT_EQ(kernel / ((1 - t) * (1 - s)), 1 / (1 - s * t));
    }
}

TEST(MomentExact, DivergentRatesThrow) {
  EXPECT_THROW((void)conlag::moment_exact(ReducedPoly{1}), conlag::divergence_error);
  EXPECT_THROW((void)conlag::moment_exact(ExpPoly::exp(1)), conlag::divergence_error);
}

TEST(Orthonormality, Examples) {
  EXPECT_EQ(conlag::orthonormality(0, 0), 1);
  EXPECT_EQ(conlag::orthonormality(3, 3), 1);
  EXPECT_EQ(conlag::orthonormality(2, 5), 0);
}

TEST(Orthonormality, IdentityMatrix) {
  for (unsigned i = 0; i <= 10; ++i)
    for (unsigned j = 0; j <= 10; ++j) EXPECT_EQ(conlag::orthonormality(i, j), i == j ? 1 : 0) << i << "," << j;
}

TEST(GaussLaguerre, Examples) {
  const auto r1 = conlag::gauss_laguerre(1);
  ASSERT_EQ(r1.nodes.size(), 1u);
  EXPECT_NEAR(r1.nodes[0], 1.0, 1e-15);
  EXPECT_NEAR(r1.weights[0], 1.0, 1e-15);

  const auto r2 = conlag::gauss_laguerre(2);
  // a few ulps of each root
  EXPECT_NEAR(r2.nodes[0], 2.0 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.nodes[1], 2.0 + std::sqrt(2.0), 4e-15);

  const auto r20 = conlag::gauss_laguerre(20);
  EXPECT_NEAR(r20.apply([](double u) { return std::pow(u, 5); }), 120.0, 120.0 * 1e-10);
}

TEST(GaussLaguerre, RuleInvariants) {
  for (unsigned order : {1u, 3u, 8u, 20u, 40u, 64u}) {
    const auto rule = conlag::gauss_laguerre(order);
    ASSERT_EQ(rule.nodes.size(), order);
    EXPECT_TRUE(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    EXPECT_TRUE(std::adjacent_find(rule.nodes.begin(), rule.nodes.end()) == rule.nodes.end());
    double sum = 0.0;
    for (double w : rule.weights) {
      EXPECT_GT(w, 0.0);
      sum += w;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12) << order;
  }
}

TEST(GaussLaguerre, ExactnessDegree) {
  for (unsigned order : {5u, 10u, 20u}) {
    const auto rule = conlag::gauss_laguerre(order);
    for (unsigned k = 0; k <= 2 * order - 1; ++k) {
      const double exact = conlag::to_double(conlag::moment_exact(ExpPoly(ReducedPoly::monomial(1, k), -1)));
      EXPECT_LE(std::abs(rule.apply([k](double u) { return std::pow(u, k); }) - exact) / exact, 1e-10)
          << order << " " << k;
    }
  }
}

TEST(GaussLaguerre, OrderOutOfRange) {
  EXPECT_THROW((void)conlag::gauss_laguerre(0), conlag::domain_error);
  EXPECT_THROW((void)conlag::gauss_laguerre(65), conlag::domain_error);
}

TEST(QuadDalpha, Examples) {
  const auto r20 = conlag::gauss_laguerre(20);
  const conlag::AlphaValue half(0.5);
  EXPECT_NEAR(conlag::quad_dalpha([&](double x) { return std::exp(-half.reduce(x)); }, half, r20), 1.0, 1e-8);
  for (double a : {0.25, 0.5, 0.75, 1.0}) {
    const conlag::AlphaValue alpha(a);
    auto f = [&](double x) {
      const double u = alpha.reduce(x);
      return std::exp(-u) * (1 - u) * (1 - u);
    };
    EXPECT_NEAR(conlag::quad_dalpha(f, alpha, r20), 1.0, 1e-8);
  }
  const auto r30 = conlag::gauss_laguerre(30);
  const conlag::AlphaValue one(1.0);
  EXPECT_NEAR(conlag::quad_dalpha([](double x) { return std::exp(-2 * x); }, one, r30), 0.5, 1e-7);
}

TEST(QuadDalpha, AgreesWithExactMoments) {
  conlag::RandomExact gen(31);
  const std::array<Rational, 4> rates{Rational(-1, 2), -1, Rational(-3, 2), -2};
  const auto rule = conlag::gauss_laguerre(20);
  for (int i = 0; i < 30; ++i) {
    const ExpPoly p = gen.exp_poly(10, rates);
    const double exact = conlag::to_double(conlag::moment_exact(p));
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
      const conlag::AlphaValue alpha(a);
      const double q = conlag::quad_dalpha([&](double x) { return conlag::eval(p, x, alpha); }, alpha, rule);
      EXPECT_LE(std::abs(q - exact), 1e-8 * (1 + std::abs(exact))) << p.to_string() << " a=" << a;
    }
  }
}

TEST(QuadTransform, Examples) {
  const auto rule = conlag::gauss_laguerre(64);
  EXPECT_NEAR(conlag::quad_transform([](double) { return 1.0; }, 2.0, rule), 0.5, 1e-10);
  EXPECT_NEAR(conlag::quad_transform([](double u) { return std::cos(u); }, 1.0, rule), 0.5, 1e-6);
  EXPECT_NEAR(conlag::quad_transform([](double u) { return u * std::exp(-u); }, 2.0, rule), 1.0 / 9.0, 1e-8);
  EXPECT_THROW((void)conlag::quad_transform([](double) { return 1.0; }, 0.0, rule), conlag::domain_error);
}
