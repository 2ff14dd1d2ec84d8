#pragma once

// Registry of invariant suites, grouped by module. Each suite returns a
// pass/fail verdict with a one-line detail; exceptions are caught and
// reported as failures.

#include "conlag/alpha_calc.hpp"
#include "conlag/figures.hpp"
#include "conlag/integrate.hpp"
#include "conlag/laguerre.hpp"
#include "conlag/laplace.hpp"
#include "conlag/random.hpp"
#include "conlag/table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conlag {

struct SuiteResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> entries;

  bool all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const SuiteResult& r) { return r.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const SuiteResult& r) { return !r.passed; }));
  }
};

struct Verdict {
  bool passed;
  std::string detail;
};

struct Suite {
  std::string module;
  std::string name;
  std::function<Verdict()> run;
};

namespace detail {

inline Verdict pass(std::string detail) { return {true, std::move(detail)}; }
inline Verdict fail(std::string detail) { return {false, std::move(detail)}; }

inline const std::array<double, 4>& alpha_grid() {
  static const std::array<double, 4> a{0.25, 0.5, 0.75, 1.0};
  return a;
}

inline std::vector<Suite> alpha_calc_suites() {
  std::vector<Suite> s;
  s.push_back({"alpha_calc", "product-rule", [] {
                 RandomExact gen(101);
                 const std::array<Rational, 4> rates{-2, -1, 0, 1};
                 for (int i = 0; i < 200; ++i) {
                   const ExpPoly p = gen.exp_poly(6, rates), q = gen.exp_poly(6, rates);
                   if (!(d_alpha_exact(p * q) == d_alpha_exact(p) * q + p * d_alpha_exact(q)))
                     return fail("product rule broken for p = " + p.to_string() + ", q = " + q.to_string());
                 }
                 return pass("200 random pairs");
               }});
  s.push_back({"alpha_calc", "leibniz", [] {
                 RandomExact gen(102);
                 const std::array<Rational, 4> rates{-2, -1, 0, 1};
                 for (int i = 0; i < 60; ++i) {
                   const ExpPoly f = gen.exp_poly(5, rates), g = gen.exp_poly(5, rates);
                   const unsigned n = gen.uniform(0, 5);
                   ExpPoly sum;
                   for (unsigned k = 0; k <= n; ++k)
                     sum = sum + d_alpha_n(f, n - k) * d_alpha_n(g, k) * Rational(binomial(n, k));
                   if (!(d_alpha_n(f * g, n) == sum)) return fail("Leibniz expansion differs at n = " + std::to_string(n));
                 }
                 return pass("60 random pairs, n <= 5");
               }});
  s.push_back({"alpha_calc", "exact-numeric-agreement", [] {
                 double worst_ratio = 1e300;
                 for (unsigned n = 0; n <= 5; ++n) {
                   const ExpPoly poly = laguerre_closed(n);
                   const ExpPoly deriv = d_alpha_exact(poly);
                   for (double a : alpha_grid()) {
                     const AlphaValue alpha(a);
                     auto f = [&](double x) { return eval(poly, x, alpha); };
                     for (double x : {0.5, 1.0, 2.0}) {
                       const double exact = eval(deriv, x, alpha);
                       const double e1 = std::abs(d_alpha_numeric(f, x, alpha, 1e-2) - exact);
                       const double e2 = std::abs(d_alpha_numeric(f, x, alpha, 5e-3) - exact);
                       if (e1 < 1e-11) continue;  // exact up to rounding (degree <= 2 in x)
                       const double ratio = e1 / e2;
                       worst_ratio = std::min(worst_ratio, ratio);
                       if (ratio < 3.5)
                         return fail("error ratio " + format_double(ratio) + " for L_" + std::to_string(n) +
                                     " at a = " + format_double(a) + ", x = " + format_double(x));
                     }
                   }
                 }
                 return pass("worst halving ratio " + format_double(worst_ratio));
               }});
  s.push_back({"alpha_calc", "canonical-idempotence", [] {
                 RandomExact gen(103);
                 const std::array<Rational, 4> rates{-2, -1, 0, 1};
                 for (int i = 0; i < 100; ++i) {
                   const ExpPoly p = gen.exp_poly(6, rates) * gen.exp_poly(6, rates);
                   if (!(canonicalize(p) == p)) return fail("re-canonicalizing changed " + p.to_string());
                 }
                 return pass("100 random products");
               }});
  s.push_back({"alpha_calc", "x-view-round-trip", [] {
                 RandomExact gen(104);
                 for (int i = 0; i < 100; ++i) {
                   const ReducedPoly p = gen.poly(10);
                   if (!(reduce(x_view(p)) == p)) return fail("round trip changed " + p.to_string());
                 }
                 for (unsigned n = 0; n <= 12; ++n)
                   if (!(reduce(x_view(laguerre_closed(n))) == laguerre_closed(n))) return fail("round trip of L_n");
                 return pass("100 random + L_0..L_12");
               }});
  return s;
}

inline std::vector<Suite> laguerre_suites() {
  std::vector<Suite> s;
  s.push_back({"laguerre", "triple-construction", [] {
                 for (unsigned n = 0; n <= 12; ++n) {
                   const ReducedPoly closed = laguerre_closed(n);
                   if (!(laguerre_rodrigues(n) == closed)) return fail("Rodrigues differs at n = " + std::to_string(n));
                   if (!(solve_laguerre_ode(n) == closed)) return fail("transform solution differs at n = " + std::to_string(n));
                 }
                 return pass("n = 0..12");
               }});
  s.push_back({"laguerre", "associated-triple", [] {
                 for (unsigned n = 0; n <= 8; ++n)
                   for (unsigned m = 0; m <= 4; ++m) {
                     const ReducedPoly closed = assoc_closed(n, m);
                     if (!(assoc_from_derivative(n, m) == closed) || !(assoc_rodrigues(n, m) == closed))
                       return fail("mismatch at n = " + std::to_string(n) + ", m = " + std::to_string(m));
                   }
                 return pass("n <= 8, m <= 4");
               }});
  s.push_back({"laguerre", "ode-annihilation", [] {
                 for (unsigned n = 0; n <= 10; ++n)
                   for (unsigned m = 0; m <= 4; ++m)
                     if (!ode_residual(assoc_closed(n, m), n, m).is_zero())
                       return fail("nonzero residual at n = " + std::to_string(n) + ", m = " + std::to_string(m));
                 return pass("n <= 10, m <= 4");
               }});
  s.push_back({"laguerre", "generating-coefficients", [] {
                 for (unsigned m = 0; m <= 3; ++m) {
                   const auto g = generating_series(m, 10);
                   for (unsigned n = 0; n <= 10; ++n)
                     if (!(g.coefficient_polys[n] == assoc_closed(n, m)))
                       return fail("coefficient of t^" + std::to_string(n) + " differs for m = " + std::to_string(m));
                 }
                 return pass("N = 10, m = 0..3");
               }});
  s.push_back({"laguerre", "zero-values", [] {
                 for (unsigned n = 0; n <= 12; ++n) {
                   const ZeroValues expected{1, -Rational(n), Rational(n) * (Rational(n) - 1) / 2};
                   if (!(values_at_zero(n) == expected)) return fail("values at zero differ for n = " + std::to_string(n));
                 }
                 return pass("n = 0..12");
               }});
  s.push_back({"laguerre", "classical-oracle", [] {
                 double worst = 0.0;
                 const AlphaValue one(1.0);
                 for (unsigned n = 0; n <= 12; ++n)
                   for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                     const double err = std::abs(eval(laguerre_closed(n), x, one) - classical_laguerre(n, x).value);
                     worst = std::max(worst, err);
                     if (err > 1e-10) return fail("L_" + std::to_string(n) + "(" + format_double(x) + ") off by " + format_double(err));
                   }
                 return pass("max deviation " + format_double(worst));
               }});
  s.push_back({"laguerre", "generating-numeric", [] {
                 const double t = 0.3;
                 double worst = 0.0;
                 for (unsigned m = 0; m <= 3; ++m)
                   for (double a : {0.5, 1.0})
                     for (double x : {0.5, 1.0}) {
                       const AlphaValue alpha(a);
                       const double u = alpha.reduce(x);
                       double partial = 0.0;
                       for (unsigned n = 0; n <= 25; ++n) partial += eval(assoc_closed(n, m), x, alpha) * std::pow(t, n);
                       const double closed = std::exp(-u * t / (1 - t)) / std::pow(1 - t, m + 1);
                       worst = std::max(worst, std::abs(partial - closed));
                     }
                 return worst <= 1e-8 ? pass("max deviation " + format_double(worst))
                                      : fail("partial sums off by " + format_double(worst));
               }});
  return s;
}

inline std::vector<Suite> laplace_suites() {
  std::vector<Suite> s;
  s.push_back({"laplace", "round-trip", [] {
                 RandomExact gen(201);
                 const std::array<Rational, 5> rates{-3, -2, -1, 0, Rational(1, 2)};
                 for (int i = 0; i < 100; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates);
                   if (!(inverse(transform(p)) == p)) return fail("inverse(transform(p)) != p for " + p.to_string());
                 }
                 return pass("100 random exp-polynomials");
               }});
  s.push_back({"laplace", "linearity", [] {
                 RandomExact gen(202);
                 const std::array<Rational, 5> rates{-3, -2, -1, 0, Rational(1, 2)};
                 for (int i = 0; i < 100; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates), q = gen.exp_poly(8, rates);
                   const Rational a = gen.rational(), b = gen.rational();
                   if (!(transform(p * a + q * b) == transform(p) * a + transform(q) * b)) return fail("linearity broken");
                 }
                 return pass("100 random combinations");
               }});
  s.push_back({"laplace", "shift", [] {
                 RandomExact gen(203);
                 const std::array<Rational, 5> rates{-3, -2, -1, 0, Rational(1, 2)};
                 for (int i = 0; i < 60; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates);
                   for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)})
                     if (!(transform(ExpPoly::exp(-a) * p) == transform(p).shifted(a)))
                       return fail("shift theorem broken for a = " + to_string(a));
                 }
                 return pass("60 random exp-polynomials, a in {1, 2, 1/2}");
               }});
  s.push_back({"laplace", "u-multiplication", [] {
                 RandomExact gen(204);
                 const std::array<Rational, 5> rates{-3, -2, -1, 0, Rational(1, 2)};
                 for (int i = 0; i < 60; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates);
                   for (unsigned n = 1; n <= 4; ++n)
                     if (!(transform(ExpPoly(ReducedPoly::monomial(1, n)) * p) == d_ds(transform(p), n) * Rational(sign_power(n))))
                       return fail("u^n multiplication rule broken at n = " + std::to_string(n));
                 }
                 return pass("60 random exp-polynomials, n <= 4");
               }});
  s.push_back({"laplace", "derivative-rule", [] {
                 RandomExact gen(205);
                 const std::array<Rational, 5> rates{-3, -2, -1, 0, Rational(1, 2)};
                 for (int i = 0; i < 100; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates);
                   if (!(transform(d_alpha_exact(p)) == derivative_rule(transform(p), p.value_at_zero())))
                     return fail("derivative rule broken for " + p.to_string());
                 }
                 return pass("100 random exp-polynomials");
               }});
  s.push_back({"laplace", "named-pairs-quadrature", [] {
                 const QuadratureRule rule = gauss_laguerre(64);
                 double worst = 0.0;
                 auto check = [&](NamedSignal sig, double a, std::initializer_list<double> grid) {
                   const AlphaValue alpha(a);
                   const NamedTransform closed = transform_named(sig, alpha);
                   for (double sv : grid) {
                     const double q = quad_transform([&](double u) { return signal_value(sig, alpha, u); }, sv, rule);
                     worst = std::max(worst, std::abs(q - closed(sv)));
                   }
                 };
                 for (double a : alpha_grid()) {
                   check({SignalKind::one}, a, {0.5, 1, 2, 3, 4});
                   for (int k = 1; k <= 5; ++k) check({SignalKind::power_p, k * a}, a, {0.5, 1, 2, 3, 4});
                 }
                 check({SignalKind::exp_u}, 1.0, {2, 2.5, 3, 4, 5});
                 check({SignalKind::sin_wu, 0, 1}, 1.0, {1, 1.5, 2, 3, 4});
                 check({SignalKind::cos_wu, 0, 1}, 1.0, {1, 1.5, 2, 3, 4});
                 return worst <= 1e-8 ? pass("max deviation " + format_double(worst))
                                      : fail("quadrature off by " + format_double(worst));
               }});
  s.push_back({"laplace", "s-domain-residual", [] {
                 for (unsigned n = 0; n <= 12; ++n)
                   if (!s_domain_residual(laguerre_image(n), n).is_zero())
                     return fail("nonzero residual at n = " + std::to_string(n));
                 return pass("n = 0..12");
               }});
  return s;
}

inline std::vector<Suite> integrate_suites() {
  std::vector<Suite> s;
  s.push_back({"integrate", "exact-vs-numeric", [] {
                 RandomExact gen(301);
                 const std::array<Rational, 4> rates{Rational(-1, 2), -1, Rational(-3, 2), -2};
                 const QuadratureRule rule = gauss_laguerre(20);
                 double worst = 0.0;
                 for (int i = 0; i < 40; ++i) {
                   const ExpPoly p = gen.exp_poly(10, rates);
                   const double exact = to_double(moment_exact(p));
                   for (double a : alpha_grid()) {
                     const AlphaValue alpha(a);
                     const double q = quad_dalpha([&](double x) { return eval(p, x, alpha); }, alpha, rule);
                     const double rel = std::abs(q - exact) / (1.0 + std::abs(exact));
                     worst = std::max(worst, rel);
                   }
                 }
                 return worst <= 1e-8 ? pass("max scaled deviation " + format_double(worst))
                                      : fail("scaled deviation " + format_double(worst));
               }});
  s.push_back({"integrate", "alpha-independence", [] {
                 RandomExact gen(302);
                 const std::array<Rational, 3> rates{-1, Rational(-3, 2), -2};
                 const QuadratureRule rule = gauss_laguerre(20);
                 double worst = 0.0;
                 for (int i = 0; i < 40; ++i) {
                   const ExpPoly p = gen.exp_poly(8, rates);
                   std::vector<double> vals;
                   for (double a : alpha_grid()) {
                     const AlphaValue alpha(a);
                     vals.push_back(quad_dalpha([&](double x) { return eval(p, x, alpha); }, alpha, rule));
                   }
                   const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
                   worst = std::max(worst, (*hi - *lo) / (1.0 + std::abs(*lo)));
                 }
                 return worst <= 1e-8 ? pass("max spread " + format_double(worst)) : fail("spread " + format_double(worst));
               }});
  s.push_back({"integrate", "orthogonality-identity-11x11", [] {
                 for (unsigned i = 0; i <= 10; ++i)
                   for (unsigned j = 0; j <= 10; ++j)
                     if (orthonormality(i, j) != (i == j ? 1 : 0))
                       return fail("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
                                   to_string(orthonormality(i, j)));
                 return pass("exact identity");
               }});
  s.push_back({"integrate", "gauss-laguerre-exactness", [] {
                 double worst = 0.0;
                 for (unsigned order : {5u, 10u, 20u}) {
                   const QuadratureRule rule = gauss_laguerre(order);
                   for (unsigned k = 0; k <= 2 * order - 1; ++k) {
                     const double exact = to_double(moment_exact(ExpPoly(ReducedPoly::monomial(1, k), Rational(-1))));
                     const double q = rule.apply([k](double u) { return std::pow(u, k); });
                     worst = std::max(worst, std::abs(q - exact) / exact);
                   }
                 }
                 return worst <= 1e-10 ? pass("max relative deviation " + format_double(worst))
                                       : fail("relative deviation " + format_double(worst));
               }});
  return s;
}

inline std::vector<Suite> cli_suites() {
  std::vector<Suite> s;
  s.push_back({"cli", "csv-determinism", [] {
                 const std::array<double, 4> alphas{0.25, 0.5, 0.75, 1.0};
                 const std::string a = to_csv(build_table({3, 2}, alphas, 0, 8, 200));
                 const std::string b = to_csv(build_table({3, 2}, alphas, 0, 8, 200));
                 return a == b ? pass("identical bytes") : fail("outputs differ");
               }});
  s.push_back({"cli", "figure-fixtures", [] {
                 double worst = 0.0;
                 const std::array<double, 3> alphas{0.5, 0.75, 1.0};
                 for (const auto& cap : figure_captions()) {
                   const SampleTable t = build_table({cap.n, cap.m}, alphas, 0, 4, 5);
                   for (const auto& row : t.rows)
                     for (std::size_t c = 0; c < alphas.size(); ++c)
                       worst = std::max(worst, std::abs(row[c + 1] - cap.formula(row[0], alphas[c])));
                 }
                 return worst <= 1e-12 ? pass("max deviation " + format_double(worst))
                                       : fail("deviation " + format_double(worst));
               }});
  return s;
}

}  // namespace detail

inline std::vector<Suite> all_suites() {
  std::vector<Suite> all;
  for (auto group : {detail::alpha_calc_suites, detail::laguerre_suites, detail::laplace_suites,
                     detail::integrate_suites, detail::cli_suites}) {
    auto suites = group();
    std::move(suites.begin(), suites.end(), std::back_inserter(all));
  }
  return all;
}

inline std::vector<std::string> verify_scopes() { return {"all", "alpha_calc", "laguerre", "laplace", "integrate", "cli"}; }

/// Runs every suite whose module matches `scope` ("all" runs everything).
/// Throws domain_error for an unknown scope.
inline VerifyReport run_verify(std::string_view scope) {
  const auto scopes = verify_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end())
    throw domain_error("unknown verify scope '" + std::string(scope) + "'");
  VerifyReport report;
  for (const auto& suite : all_suites()) {
    if (scope != "all" && suite.module != scope) continue;
    SuiteResult r{suite.module, suite.name, false, ""};
    try {
      const Verdict v = suite.run();
      r.passed = v.passed;
      r.detail = v.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace conlag
