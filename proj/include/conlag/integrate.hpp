#pragma once

// Integration against the conformable measure d^a x = x^(a-1) dx on [0, inf).
// With u = x^a/a the measure is exactly du, so all work happens in u-space
// where the integrands are smooth.

#include "conlag/alpha_calc.hpp"
#include "conlag/errors.hpp"
#include "conlag/laguerre.hpp"
#include "conlag/rational.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace conlag {

/// int_0^inf p du, using int u^k e^(l u) du = k! / (-l)^(k+1) for l < 0.
inline Rational moment_exact(const ExpPoly& p) {
  Rational total = 0;
  for (const auto& term : p.terms()) {
    if (term.rate >= 0)
      throw divergence_error("term with rate " + to_string(term.rate) + " is not integrable on [0, inf)");
    const Rational decay = -term.rate;
    Rational power = Rational(1) / decay;
    for (std::size_t k = 0; k < term.poly.size(); ++k) {
      total += term.poly.coeffs()[k] * factorial(static_cast<unsigned>(k)) * power;
      power /= decay;
    }
  }
  return total;
}

/// int_0^inf e^(-u) L_n(u) L_m(u) du.
inline Rational orthonormality(unsigned n, unsigned m) {
  return moment_exact(ExpPoly(laguerre_closed(n) * laguerre_closed(m), Rational(-1)));
}

/// Gauss-Laguerre rule for int_0^inf e^(-u) g(u) du.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  unsigned order = 0;

  template <class G>
  double apply(G&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
    return sum;
  }
};

namespace detail {

struct LaguerrePair {
  double value;     // L_k(x)
  double previous;  // L_{k-1}(x)
};

/// Classical L_k(x) by the three-term recurrence.
inline LaguerrePair classical_laguerre(unsigned k, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

/// Root of L_k in (lo, hi), where L_k changes sign. Newton steps that leave
/// the bracket fall back to bisection.
inline double refine_root(unsigned k, double lo, double hi) {
  double f_lo = classical_laguerre(k, lo).value;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const auto [f, prev] = classical_laguerre(k, x);
    if (f == 0.0) return x;
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    const double df = k * (f - prev) / x;
    double next = x - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * x || hi - lo <= 4e-16 * hi) return next;
    x = next;
  }
  throw algebra_error("Laguerre root refinement stalled for order " + std::to_string(k));
}

}  // namespace detail

/**
 * Nodes are the zeros of the classical L_order, located order by order: the
 * zeros of L_(k-1) strictly interlace those of L_k, which gives one sign-change
 * bracket per root. Weights are x_i / ((N+1)^2 L_(N+1)(x_i)^2).
 */
inline QuadratureRule gauss_laguerre(unsigned order) {
  if (order < 1 || order > 64) throw domain_error("gauss_laguerre supports orders 1..64");
  std::vector<double> zeros;
  for (unsigned k = 1; k <= order; ++k) {
    std::vector<double> edges;
    edges.reserve(k + 1);
    edges.push_back(0.0);
    edges.insert(edges.end(), zeros.begin(), zeros.end());
    edges.push_back(4.0 * k + 6.0);  // beyond the largest zero of L_k
    std::vector<double> next(k);
    for (unsigned i = 0; i < k; ++i) next[i] = detail::refine_root(k, edges[i], edges[i + 1]);
    zeros = std::move(next);
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes = zeros;
  rule.weights.reserve(order);
  const double np1 = order + 1.0;
  for (double x : zeros) {
    const double l = detail::classical_laguerre(order + 1, x).value;
    rule.weights.push_back(x / (np1 * np1 * l * l));
  }
  return rule;
}

/**
 * int_0^inf f(x) d^a x, via x = (a u)^(1/a) and the rule applied to
 * f(x(u)) e^u. f must decay at least like a polynomial times e^(-c u).
 */
template <class F>
double quad_dalpha(F&& f, AlphaValue alpha, const QuadratureRule& rule) {
  return rule.apply([&](double u) { return f(alpha.expand(u)) * std::exp(u); });
}

/// int_0^inf e^(-s u) g(u) du = (1/s) int_0^inf e^(-v) g(v/s) dv.
template <class G>
double quad_transform(G&& g, double s, const QuadratureRule& rule) {
  if (!(s > 0.0)) throw domain_error("quad_transform requires s > 0");
  return rule.apply([&](double v) { return g(v / s); }) / s;
}

}  // namespace conlag
