#pragma once

// Conformable Laplace transform with base point 0,
//
//   F(s) = int_0^inf exp(-s x^a/a) f(x) x^(a-1) dx = int_0^inf exp(-s u) f(u) du,
//
// i.e. the classical transform in the reduced variable u. Exp-polynomials map
// to exact partial fractions: u^k e^(l u) -> k! / (s - l)^(k+1).

#include "conlag/alpha_calc.hpp"
#include "conlag/errors.hpp"
#include "conlag/laguerre.hpp"
#include "conlag/poly.hpp"
#include "conlag/rational.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace conlag {

struct PoleTerm {
  Rational coeff;
  Rational pole;
  unsigned order = 1;

  friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/**
 * Rational function of s in partial-fraction form:
 * sum of c / (s - pole)^order plus a polynomial part.
 *
 * Canonical: each (pole, order) appears once with c != 0.
 */
class TransformExpr {
 public:
  TransformExpr() = default;

  static TransformExpr pole(const Rational& coeff, const Rational& pole, unsigned order) {
    TransformExpr t;
    t.add_pole(coeff, pole, order);
    return t;
  }

  static TransformExpr polynomial(SPoly p) {
    TransformExpr t;
    t.poly_ = std::move(p);
    return t;
  }

  std::vector<PoleTerm> pole_terms() const {
    std::vector<PoleTerm> out;
    out.reserve(poles_.size());
    for (const auto& [key, c] : poles_) out.push_back({c, key.pole, key.order});
    return out;
  }

  const SPoly& poly_part() const { return poly_; }

  bool is_zero() const { return poles_.empty() && poly_.is_zero(); }

  void add_pole(const Rational& coeff, const Rational& pole, unsigned order) {
    if (order == 0) {
      poly_ += SPoly::constant(coeff);
      return;
    }
    const Key key{pole, order};
    auto it = poles_.find(key);
    if (it == poles_.end()) {
      if (coeff != 0) poles_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) poles_.erase(it);
  }

  TransformExpr& operator+=(const TransformExpr& o) {
    for (const auto& [key, c] : o.poles_) add_pole(c, key.pole, key.order);
    poly_ += o.poly_;
    return *this;
  }

  TransformExpr& operator*=(const Rational& c) {
    if (c == 0) return *this = TransformExpr{};
    for (auto& [key, v] : poles_) v *= c;
    poly_ *= c;
    return *this;
  }

  friend TransformExpr operator+(TransformExpr a, const TransformExpr& b) { return a += b; }
  friend TransformExpr operator-(TransformExpr a, const TransformExpr& b) {
    TransformExpr nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend TransformExpr operator*(TransformExpr a, const Rational& c) { return a *= c; }
  friend TransformExpr operator*(const Rational& c, TransformExpr a) { return a *= c; }

  friend bool operator==(const TransformExpr& a, const TransformExpr& b) {
    return a.poles_ == b.poles_ && a.poly_ == b.poly_;
  }

  /// F(s + a): every pole moves from l to l - a.
  TransformExpr shifted(const Rational& a) const {
    TransformExpr out;
    for (const auto& [key, c] : poles_) out.add_pole(c, key.pole - a, key.order);
    out.poly_ = poly_.taylor_shift(a);
    return out;
  }

  double operator()(double s) const {
    double v = poly_.evaluate(s);
    for (const auto& [key, c] : poles_) v += to_double(c) / std::pow(s - to_double(key.pole), key.order);
    return v;
  }

  /// Pole terms as "c/(s-l)^m" in order of increasing pole and order, then
  /// the polynomial part. "1/s", "1/(s-1)", "2/(s+1)^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const Rational& c, const std::string& body) {
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      out += conlag::to_string(mag) + body;
    };
    for (const auto& [key, c] : poles_) {
      std::string base = "s";
      if (key.pole > 0) base = "(s-" + conlag::to_string(key.pole) + ")";
      if (key.pole < 0) base = "(s+" + conlag::to_string(Rational(-key.pole)) + ")";
      append(c, "/" + base + (key.order > 1 ? "^" + std::to_string(key.order) : ""));
    }
    for (std::size_t k = 0; k < poly_.size(); ++k) {
      const Rational& c = poly_.coeffs()[k];
      if (c == 0) continue;
      append(c, k == 0 ? "" : (k == 1 ? "*s" : "*s^" + std::to_string(k)));
    }
    return out;
  }

 private:
  struct Key {
    Rational pole;
    unsigned order;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.pole != b.pole) return a.pole < b.pole;
      return a.order < b.order;
    }
    friend bool operator==(const Key&, const Key&) = default;
  };

  std::map<Key, Rational> poles_;
  SPoly poly_;
};

enum class Convergence {
  formal,  // any rational rate; pairs are formal algebra
  strict,  // reject rates at or beyond the abscissa
};

/// u^k e^(l u) -> k!/(s-l)^(k+1), extended linearly. In strict mode every
/// rate must lie below `abscissa`, otherwise convergence_error.
inline TransformExpr transform(const ExpPoly& p, Convergence mode = Convergence::formal,
                               const Rational& abscissa = 1) {
  TransformExpr out;
  for (const auto& term : p.terms()) {
    if (mode == Convergence::strict && term.rate >= abscissa)
      throw convergence_error("rate " + to_string(term.rate) + " is outside the region of convergence (rate < " +
                              to_string(abscissa) + ")");
    for (std::size_t k = 0; k < term.poly.size(); ++k) {
      const Rational& c = term.poly.coeffs()[k];
      if (c == 0) continue;
      out.add_pole(c * factorial(static_cast<unsigned>(k)), term.rate, static_cast<unsigned>(k) + 1);
    }
  }
  return out;
}

/// c/(s-l)^(k+1) -> c u^k e^(l u) / k!.
inline ExpPoly inverse(const TransformExpr& t) {
  if (!t.poly_part().is_zero())
    throw not_invertible_error("polynomial part " + t.poly_part().to_string() + " has no inverse in the function class");
  std::vector<ExpTerm> terms;
  for (const auto& pt : t.pole_terms())
    terms.push_back({ReducedPoly::monomial(pt.coeff / factorial(pt.order - 1), pt.order - 1), pt.pole});
  return ExpPoly::from_terms(std::move(terms));
}

/// n-th derivative in s.
inline TransformExpr d_ds(const TransformExpr& t, unsigned n) {
  TransformExpr out = TransformExpr::polynomial(t.poly_part().derivative(n));
  for (const auto& pt : t.pole_terms())
    out.add_pole(pt.coeff * rising_factorial(pt.order, n) * sign_power(n), pt.pole, pt.order + n);
  return out;
}

/// s * T, re-expanded: s c/(s-l)^m = c/(s-l)^(m-1) + c l/(s-l)^m.
inline TransformExpr mul_s(const TransformExpr& t) {
  TransformExpr out = TransformExpr::polynomial(t.poly_part().shifted_up(1));
  for (const auto& pt : t.pole_terms()) {
    out.add_pole(pt.coeff, pt.pole, pt.order - 1);
    out.add_pole(pt.coeff * pt.pole, pt.pole, pt.order);
  }
  return out;
}

inline TransformExpr mul_poly(const TransformExpr& t, const SPoly& q) {
  TransformExpr out;
  TransformExpr power = t;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q.coeffs()[k] != 0) out += power * q.coeffs()[k];
    if (k + 1 < q.size()) power = mul_s(power);
  }
  return out;
}

/// Image of D^a f from the image of f: s F(s) - f(0).
inline TransformExpr derivative_rule(const TransformExpr& t, const Rational& f0) {
  return mul_s(t) - TransformExpr::polynomial(SPoly::constant(f0));
}

/// -s(s-1) Y' + (n+1-s) Y, the s-domain Laguerre equation with its overall
/// factor a divided out.
inline TransformExpr s_domain_residual(const TransformExpr& y, unsigned n) {
  const SPoly lead{0, 1, -1};
  const SPoly drift{Rational(n + 1), Rational(-1)};
  return mul_poly(d_ds(y, 1), lead) + mul_poly(y, drift);
}

/// (s-1)^n / s^(n+1) = sum_k (-1)^k C(n,k) / s^(k+1).
inline TransformExpr laguerre_image(unsigned n) {
  TransformExpr out;
  for (unsigned k = 0; k <= n; ++k) out.add_pole(Rational(binomial(n, k) * sign_power(k)), 0, k + 1);
  return out;
}

/**
 * Image of a y-linear expression in the s-domain,
 *
 *   sum_r y_derivs[r](s) Y^(r)(s) + sum_l boundary[l](s) y_l,
 *
 * where y_l is the l-th iterated conformable derivative of y at 0.
 */
struct SImage {
  std::vector<SPoly> y_derivs;
  std::vector<SPoly> boundary;

  SImage& operator+=(const SImage& o) {
    auto acc = [](std::vector<SPoly>& a, const std::vector<SPoly>& b) {
      if (b.size() > a.size()) a.resize(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    };
    acc(y_derivs, o.y_derivs);
    acc(boundary, o.boundary);
    return *this;
  }

  friend SImage operator*(SImage a, const Rational& c) {
    for (auto& p : a.y_derivs) p *= c;
    for (auto& p : a.boundary) p *= c;
    return a;
  }

  bool boundary_free() const {
    for (const auto& b : boundary)
      if (!b.is_zero()) return false;
    return true;
  }
};

/// Image of (D^a)^order y by iterating the first-order derivative rule:
/// s^order Y - sum_l s^(order-1-l) y_l.
inline SImage image_of_derivative(unsigned order) {
  SImage img;
  img.y_derivs = {SPoly::monomial(1, order)};
  img.boundary.resize(order);
  for (unsigned l = 0; l < order; ++l) img.boundary[l] = SPoly::monomial(-1, order - 1 - l);
  return img;
}

/// Image of u * g from the image of g: -d/ds, by the product rule on each
/// coefficient.
inline SImage times_u(const SImage& g) {
  SImage out;
  out.y_derivs.resize(g.y_derivs.size() + 1);
  for (std::size_t r = 0; r < g.y_derivs.size(); ++r) {
    out.y_derivs[r] -= g.y_derivs[r].derivative();
    out.y_derivs[r + 1] -= g.y_derivs[r];
  }
  out.boundary.resize(g.boundary.size());
  for (std::size_t l = 0; l < g.boundary.size(); ++l) out.boundary[l] = -g.boundary[l].derivative();
  return out;
}

/// Full Laplace-domain solution of the conformable Laguerre equation, step by step.
struct OdeReplay {
  unsigned n = 0;
  SImage image;                                 // transformed equation, a divided out
  SPoly dy_coeff;                               // A(s) in A Y' + B Y = 0
  SPoly y_coeff;                                // B(s)
  std::vector<std::pair<Rational, int>> factors;  // Y = prod (s - root)^exponent
  TransformExpr expansion;                      // Y in partial fractions
  TransformExpr residual;                       // s_domain_residual(expansion, n)
  ReducedPoly solution;                         // inverse transform
  bool matches_closed = false;                  // solution == laguerre_closed(n)
};

namespace detail {

inline SPoly divide_by_linear(const SPoly& p, const Rational& root) {
  if (p.size() < 2) throw algebra_error("cannot divide a constant by (s - r)");
  std::vector<Rational> q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p.coeffs()[i] + carry * root;
    q[i - 1] = carry;
  }
  if (p.coeffs()[0] + carry * root != 0) throw algebra_error("(s - " + to_string(root) + ") does not divide");
  return SPoly(std::move(q));
}

inline bool rational_sqrt(const Rational& v, Rational& out) {
  if (v < 0) return false;
  const Integer num = numerator(v);
  const Integer den = denominator(v);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  out = Rational(rn, rd);
  return true;
}

/// Rational roots of a polynomial whose zero-deflated part is at most
/// quadratic. Repeated roots are listed with multiplicity.
inline std::vector<Rational> rational_roots(SPoly p) {
  std::vector<Rational> roots;
  while (p.degree() > 0 && p.coeff(0) == 0) {
    roots.emplace_back(0);
    p = p.divided_by_power(1);
  }
  if (p.degree() == 1) {
    roots.push_back(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational root_disc;
    if (!rational_sqrt(b * b - 4 * a * c, root_disc)) throw algebra_error("irrational roots in " + p.to_string());
    roots.push_back((-b - root_disc) / (2 * a));
    roots.push_back((-b + root_disc) / (2 * a));
  } else if (p.degree() > 2) {
    throw algebra_error("root finding limited to quadratics: " + p.to_string());
  }
  return roots;
}

}  // namespace detail

/**
 * Replays the transform solution of u y'' + (1 - u) y' + n y = 0:
 *
 *  1. transform every term with the derivative and u-multiplication rules;
 *  2. check the boundary values cancel, leaving A(s) Y' + B(s) Y = 0;
 *  3. integrate Y'/Y = -B/A by partial fractions over the simple roots of A;
 *  4. fix the constant by y(0) = 1, i.e. s Y -> 1 as s -> inf;
 *  5. expand Y about its pole, check it against the binomial form, check
 *     the s-domain residual, and invert termwise.
 *
 * Throws algebra_error if any step fails.
 */
inline OdeReplay replay_laguerre_ode(unsigned n) {
  OdeReplay r;
  r.n = n;

  // u y'' + y' - u y' + n y
  r.image = times_u(image_of_derivative(2));
  r.image += image_of_derivative(1);
  r.image += times_u(image_of_derivative(1)) * Rational(-1);
  r.image += image_of_derivative(0) * Rational(n);
  if (!r.image.boundary_free()) throw algebra_error("boundary values do not cancel in the s-domain equation");
  if (r.image.y_derivs.size() != 2) throw algebra_error("s-domain equation is not first order");
  r.y_coeff = r.image.y_derivs[0];
  r.dy_coeff = r.image.y_derivs[1];

  const auto roots = detail::rational_roots(r.dy_coeff);
  const SPoly dlead = r.dy_coeff.derivative();
  int exponent_sum = 0;
  SPoly check = r.y_coeff;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw algebra_error("repeated root in the s-domain equation");
    const Rational e = -r.y_coeff(roots[i]) / dlead(roots[i]);
    if (denominator(e) != 1) throw algebra_error("non-integer exponent " + to_string(e));
    const int exponent = static_cast<int>(numerator(e));
    r.factors.emplace_back(roots[i], exponent);
    exponent_sum += exponent;
    check += detail::divide_by_linear(r.dy_coeff, roots[i]) * e;
  }
  if (!check.is_zero()) throw algebra_error("partial-fraction integration of Y'/Y failed");
  if (exponent_sum != -1) throw algebra_error("Y(s) does not decay like 1/s; y(0) = 1 cannot be imposed");

  // Y = N(s) / (s - p)^d with one pole p.
  SPoly numer = SPoly::constant(1);
  Rational pole_at;
  int depth = 0;
  for (const auto& [root, e] : r.factors) {
    if (e < 0) {
      if (depth != 0) throw algebra_error("more than one pole in Y(s)");
      pole_at = root;
      depth = -e;
    } else {
      for (int k = 0; k < e; ++k) numer = numer * SPoly{-root, 1};
    }
  }
  const SPoly about_pole = numer.taylor_shift(pole_at);
  for (std::size_t j = 0; j < about_pole.size(); ++j) {
    const Rational& c = about_pole.coeffs()[j];
    if (c == 0) continue;
    const int order = depth - static_cast<int>(j);
    if (order > 0) {
      r.expansion.add_pole(c, pole_at, static_cast<unsigned>(order));
    } else {
      r.expansion += TransformExpr::polynomial(SPoly::monomial(c, static_cast<std::size_t>(-order)).taylor_shift(-pole_at));
    }
  }
  if (!(r.expansion == laguerre_image(n))) throw algebra_error("expansion disagrees with the binomial form");

  r.residual = s_domain_residual(r.expansion, n);
  if (!r.residual.is_zero()) throw algebra_error("expanded Y(s) does not satisfy the s-domain equation");

  const auto inverted = inverse(r.expansion).as_plain();
  if (!inverted) throw algebra_error("inverse transform is not a polynomial");
  r.solution = *inverted;
  r.matches_closed = r.solution == laguerre_closed(n);
  return r;
}

inline ReducedPoly solve_laguerre_ode(unsigned n) { return replay_laguerre_ode(n).solution; }

enum class SignalKind { one, power_p, exp_u, sin_wu, cos_wu };

/// Named transform-table signals in the variable t, with u = t^a/a:
/// 1, t^p, exp(u), sin(w u), cos(w u).
struct NamedSignal {
  SignalKind kind = SignalKind::one;
  double p = 0.0;
  double omega = 1.0;
};

inline double region_abscissa(const NamedSignal& sig) { return sig.kind == SignalKind::exp_u ? 1.0 : 0.0; }

/// The signal as a function of u, for numeric transforms.
inline double signal_value(const NamedSignal& sig, AlphaValue alpha, double u) {
  switch (sig.kind) {
    case SignalKind::one: return 1.0;
    case SignalKind::power_p: return sig.p == 0.0 ? 1.0 : std::pow(alpha.expand(u), sig.p);
    case SignalKind::exp_u: return std::exp(u);
    case SignalKind::sin_wu: return std::sin(sig.omega * u);
    case SignalKind::cos_wu: return std::cos(sig.omega * u);
  }
  return 0.0;
}

/// Closed-form image of a named signal, evaluated at s inside its region.
class NamedTransform {
 public:
  NamedTransform(NamedSignal sig, AlphaValue alpha) : sig_(sig), alpha_(alpha) {
    if (sig.kind == SignalKind::power_p && !(sig.p >= 0.0)) throw domain_error("power_p needs p >= 0");
    if (!std::isfinite(sig.omega)) throw domain_error("omega must be finite");
  }

  double operator()(double s) const {
    const double a = alpha_.value();
    if (!(s > region_abscissa(sig_)))
      throw domain_error("s = " + std::to_string(s) + " is outside the region s > " +
                         std::to_string(region_abscissa(sig_)));
    switch (sig_.kind) {
      case SignalKind::one: return 1.0 / s;
      case SignalKind::power_p: {
        const double q = sig_.p / a;
        return std::pow(a, q) * std::tgamma(1.0 + q) / std::pow(s, 1.0 + q);
      }
      case SignalKind::exp_u: return 1.0 / (s - 1.0);
      case SignalKind::sin_wu: return sig_.omega / (sig_.omega * sig_.omega + s * s);
      case SignalKind::cos_wu: return s / (sig_.omega * sig_.omega + s * s);
    }
    return 0.0;
  }

  std::string formula() const {
    switch (sig_.kind) {
      case SignalKind::one: return "1/s";
      case SignalKind::power_p: return "a^(p/a)*Gamma(1+p/a)/s^(1+p/a)";
      case SignalKind::exp_u: return "1/(s-1)";
      case SignalKind::sin_wu: return "w/(s^2+w^2)";
      case SignalKind::cos_wu: return "s/(s^2+w^2)";
    }
    return "";
  }

  const NamedSignal& signal() const { return sig_; }
  AlphaValue alpha() const { return alpha_; }

 private:
  NamedSignal sig_;
  AlphaValue alpha_;
};

inline NamedTransform transform_named(NamedSignal sig, AlphaValue alpha) { return NamedTransform(sig, alpha); }

}  // namespace conlag
