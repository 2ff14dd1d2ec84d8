#pragma once

// Conformable Laguerre and associated Laguerre polynomials in the reduced
// variable u = x^a/a. Each polynomial has several independent constructions
// (closed form, Rodrigues formula, derivative relation, generating function)
// so they can be checked against each other exactly.

#include "conlag/alpha_calc.hpp"
#include "conlag/errors.hpp"
#include "conlag/poly.hpp"
#include "conlag/rational.hpp"
#include "conlag/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace conlag {

struct LaguerreIndex {
  unsigned n = 0;
  unsigned m = 0;

  friend bool operator==(const LaguerreIndex&, const LaguerreIndex&) = default;
};

/// Coefficient of u^k: (-1)^k n! / ((n-k)! (k!)^2).
inline ReducedPoly laguerre_closed(unsigned n) {
  std::vector<Rational> c(n + 1);
  const Integer nf = factorial(n);
  for (unsigned k = 0; k <= n; ++k) {
    const Integer kf = factorial(k);
    c[k] = Rational(nf, factorial(n - k) * kf * kf) * sign_power(k);
  }
  return ReducedPoly(std::move(c));
}

/// Coefficient of u^r: (-1)^r (n+m)! / ((n-r)! (r+m)! r!).
inline ReducedPoly assoc_closed(unsigned n, unsigned m) {
  std::vector<Rational> c(n + 1);
  const Integer top = factorial(n + m);
  for (unsigned r = 0; r <= n; ++r)
    c[r] = Rational(top, factorial(n - r) * factorial(r + m) * factorial(r)) * sign_power(r);
  return ReducedPoly(std::move(c));
}

namespace detail {

/// An exact value times a^alpha_power. Tracks the a-prefactors of the
/// Rodrigues formulas symbolically so they cancel without evaluating a.
struct AlphaScaled {
  ExpPoly value;
  int alpha_power = 0;
};

/**
 * Generalized Rodrigues construction:
 *
 *   x^(-m a) e^(u) / (a^n n!) * D^(n a)[x^((n+m) a) e^(-u)],
 *
 * with x^(j a) = a^j u^j. The a powers must cancel and the result must be a
 * plain polynomial divisible by u^m; anything else is an algebra bug.
 */
inline ReducedPoly rodrigues(unsigned n, unsigned m) {
  AlphaScaled weighted{ExpPoly(ReducedPoly::monomial(1, n + m), Rational(-1)), static_cast<int>(n + m)};
  weighted.value = d_alpha_n(weighted.value, n);
  weighted.value = weighted.value * ExpPoly::exp(1) * Rational(1, factorial(n));
  weighted.alpha_power -= static_cast<int>(n);  // 1 / a^n
  weighted.alpha_power -= static_cast<int>(m);  // x^(-m a) = a^(-m) u^(-m)
  if (weighted.alpha_power != 0)
    throw algebra_error("Rodrigues prefactor leaves a^" + std::to_string(weighted.alpha_power));
  const auto plain = weighted.value.as_plain();
  if (!plain) throw algebra_error("Rodrigues construction left an exponential term: " + weighted.value.to_string());
  return plain->divided_by_power(m);
}

}  // namespace detail

inline ReducedPoly laguerre_rodrigues(unsigned n) { return detail::rodrigues(n, 0); }

inline ReducedPoly assoc_rodrigues(unsigned n, unsigned m) { return detail::rodrigues(n, m); }

/// (-1)^m D^(m a) L_(n+m).
inline ReducedPoly assoc_from_derivative(unsigned n, unsigned m) {
  return laguerre_closed(n + m).derivative(m) * Rational(sign_power(m));
}

/**
 * Residual of the (associated) conformable Laguerre equation in reduced form,
 *
 *   u p'' + (1 + m - u) p' + n p,
 *
 * which is the original operator divided by its overall factor a. Zero iff p
 * is a solution.
 */
inline ReducedPoly ode_residual(const ReducedPoly& p, unsigned n, unsigned m) {
  const ReducedPoly d1 = p.derivative();
  const ReducedPoly d2 = d1.derivative();
  const ReducedPoly u{0, 1};
  const ReducedPoly drift{Rational(1 + m), Rational(-1)};
  return u * d2 + drift * d1 + p * Rational(n);
}

struct GeneratingExpansion {
  unsigned order = 0;
  std::vector<ReducedPoly> coefficient_polys;
};

/**
 * Expands (1 - t)^(-(m+1)) exp(-u t / (1 - t)) up to t^order by composing
 * truncated series; entry n is the polynomial multiplying t^n.
 */
inline GeneratingExpansion generating_series(unsigned m, unsigned order) {
  if (order < 1) throw domain_error("generating_series requires order >= 1");
  using Series = TruncatedSeries<ReducedPoly>;
  // -u t / (1 - t) = -u (t + t^2 + ...)
  Series inner(order);
  for (unsigned k = 1; k <= order; ++k) inner[k] = ReducedPoly{0, -1};
  const Series product = Series::inverse_one_minus_t_pow(order, m + 1) * Series::exp(inner);
  return {order, product.coeffs()};
}

struct ZeroValues {
  Rational value;
  Rational first_d;
  Rational second_d;

  friend bool operator==(const ZeroValues&, const ZeroValues&) = default;
};

/// (L_n(0), D^a L_n(0), D^a D^a L_n(0)); D^a is d/du on the reduced form.
inline ZeroValues values_at_zero(unsigned n) {
  const ReducedPoly p = laguerre_closed(n);
  return {p(0), p.derivative()(0), p.derivative(2)(0)};
}

}  // namespace conlag
