#include "conlag/integrate.hpp"
#include "conlag/laguerre.hpp"
#include "conlag/laplace.hpp"

#include <gtest/gtest.h>

#include <cmath>

using conlag::Rational;
using conlag::ReducedPoly;

namespace {

// Classical L_n by the three-term recurrence, written independently of the
// library for use as an oracle at a = 1.
double classical(unsigned n, double x) {
  double prev = 1.0, cur = 1.0 - x;
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(LaguerreClosed, Examples) {
  EXPECT_EQ(conlag::laguerre_closed(0), ReducedPoly{1});
  EXPECT_EQ(conlag::laguerre_closed(1), ReducedPoly({1, -1}));
  EXPECT_EQ(conlag::laguerre_closed(4), ReducedPoly({1, -4, 3, Rational(-2, 3), Rational(1, 24)}));
}

TEST(LaguerreClosed, FigureCaptionsOneToFive) {
  EXPECT_EQ(conlag::laguerre_closed(2), ReducedPoly({1, -2, Rational(1, 2)}));
  // -(x^3a - 9a x^2a + 18a^2 x^a - 6a^3)/(6a^3) in u.
  EXPECT_EQ(conlag::laguerre_closed(3), ReducedPoly({1, -3, Rational(3, 2), Rational(-1, 6)}));
  EXPECT_EQ(conlag::laguerre_closed(5),
            ReducedPoly({1, -5, 5, Rational(-5, 3), Rational(5, 24), Rational(-1, 120)}));
}

TEST(LaguerreRodrigues, Examples) {
  EXPECT_EQ(conlag::laguerre_rodrigues(0), ReducedPoly{1});
  EXPECT_EQ(conlag::laguerre_rodrigues(1), ReducedPoly({1, -1}));
  EXPECT_EQ(conlag::laguerre_rodrigues(5), conlag::laguerre_closed(5));
}

TEST(AssocClosed, Examples) {
  EXPECT_EQ(conlag::assoc_closed(1, 1), ReducedPoly({2, -1}));
  EXPECT_EQ(conlag::assoc_closed(2, 2), ReducedPoly({6, -4, Rational(1, 2)}));
  EXPECT_EQ(conlag::assoc_closed(3, 0), conlag::laguerre_closed(3));
}

TEST(AssocFromDerivative, Examples) {
  EXPECT_EQ(conlag::assoc_from_derivative(2, 1), ReducedPoly({3, -3, Rational(1, 2)}));
  for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(conlag::assoc_from_derivative(n, 0), conlag::laguerre_closed(n));
  EXPECT_EQ(conlag::assoc_from_derivative(3, 3), ReducedPoly({20, -15, 3, Rational(-1, 6)}));
}

TEST(AssocRodrigues, Examples) {
  for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(conlag::assoc_rodrigues(0, m), ReducedPoly{1});
  EXPECT_EQ(conlag::assoc_rodrigues(3, 1), ReducedPoly({4, -6, 2, Rational(-1, 6)}));
  EXPECT_EQ(conlag::assoc_rodrigues(3, 2), ReducedPoly({10, -10, Rational(15, 6), Rational(-1, 6)}));
}

TEST(Laguerre, TripleConstruction) {
  for (unsigned n = 0; n <= 12; ++n) {
    const ReducedPoly closed = conlag::laguerre_closed(n);
    EXPECT_EQ(conlag::laguerre_rodrigues(n), closed) << n;
    EXPECT_EQ(conlag::solve_laguerre_ode(n), closed) << n;
  }
}

TEST(Laguerre, AssociatedTriple) {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      EXPECT_EQ(conlag::assoc_from_derivative(n, m), conlag::assoc_closed(n, m)) << n << "," << m;
      EXPECT_EQ(conlag::assoc_rodrigues(n, m), conlag::assoc_closed(n, m)) << n << "," << m;
    }
}

TEST(Laguerre, LargeIndexCoefficientsStayExact) {
  // (n+m)! overflows 64-bit integers here; the leading coefficient is (-1)^n / n!.
  const ReducedPoly p = conlag::assoc_closed(20, 6);
  EXPECT_EQ(p.coeff(20), Rational(1, conlag::factorial(20)));
  EXPECT_EQ(p.coeff(0), Rational(conlag::binomial(26, 20)));
  EXPECT_TRUE(conlag::ode_residual(p, 20, 6).is_zero());
}

TEST(OdeResidual, Examples) {
  for (unsigned n = 0; n <= 12; ++n) EXPECT_TRUE(conlag::ode_residual(conlag::laguerre_closed(n), n, 0).is_zero());
  EXPECT_TRUE(conlag::ode_residual(ReducedPoly{1}, 0, 0).is_zero());
  EXPECT_EQ(conlag::ode_residual(ReducedPoly({0, 1}), 1, 0), ReducedPoly{1});
}

TEST(OdeResidual, AnnihilatesAssociated) {
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned m = 0; m <= 4; ++m) EXPECT_TRUE(conlag::ode_residual(conlag::assoc_closed(n, m), n, m).is_zero());
  // Wrong eigenvalue leaves a residual.
  EXPECT_FALSE(conlag::ode_residual(conlag::assoc_closed(3, 1), 2, 1).is_zero());
}

TEST(GeneratingSeries, Examples) {
  EXPECT_EQ(conlag::generating_series(0, 2).coefficient_polys[0], ReducedPoly{1});
  EXPECT_EQ(conlag::generating_series(0, 3).coefficient_polys[2], ReducedPoly({1, -2, Rational(1, 2)}));
  // (1 + 2t + 3t^2)(1 - u t + ...) at t^1: 2 - u.
  EXPECT_EQ(conlag::generating_series(1, 2).coefficient_polys[1], ReducedPoly({2, -1}));
  EXPECT_THROW((void)conlag::generating_series(0, 0), conlag::domain_error);
}

TEST(GeneratingSeries, CoefficientsAreAssociatedPolynomials) {
  for (unsigned m = 0; m <= 3; ++m) {
    const auto g = conlag::generating_series(m, 10);
    ASSERT_EQ(g.coefficient_polys.size(), 11u);
    for (unsigned n = 0; n <= 10; ++n) {
      EXPECT_LE(g.coefficient_polys[n].degree(), static_cast<int>(n));
      EXPECT_EQ(g.coefficient_polys[n], conlag::assoc_closed(n, m)) << n << "," << m;
    }
  }
}

TEST(GeneratingSeries, NumericPartialSums) {
  const double t = 0.3;
  for (double a : {0.5, 1.0})
    for (double x : {0.5, 1.0}) {
      const conlag::AlphaValue alpha(a);
      const double u = alpha.reduce(x);
      double sum = 0.0;
      for (unsigned n = 0; n <= 25; ++n) sum += conlag::eval(conlag::laguerre_closed(n), x, alpha) * std::pow(t, n);
      EXPECT_NEAR(sum, std::exp(-u * t / (1 - t)) / (1 - t), 1e-8);
    }
}

TEST(ValuesAtZero, Examples) {
  EXPECT_EQ(conlag::values_at_zero(0), (conlag::ZeroValues{1, 0, 0}));
  EXPECT_EQ(conlag::values_at_zero(1), (conlag::ZeroValues{1, -1, 0}));
  EXPECT_EQ(conlag::values_at_zero(4), (conlag::ZeroValues{1, -4, 6}));
  for (unsigned n = 0; n <= 12; ++n)
    EXPECT_EQ(conlag::values_at_zero(n), (conlag::ZeroValues{1, -Rational(n), Rational(n) * (n - Rational(1)) / 2}));
}

TEST(Laguerre, ClassicalOracleAtAlphaOne) {
  const conlag::AlphaValue one(1.0);
  for (unsigned n = 0; n <= 12; ++n)
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0})
      EXPECT_NEAR(conlag::eval(conlag::laguerre_closed(n), x, one), classical(n, x), 1e-10) << n << " " << x;
}
