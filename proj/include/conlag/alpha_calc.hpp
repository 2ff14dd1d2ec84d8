#pragma once

// Exact algebra of exp-weighted polynomials in the reduced variable
// u = x^a / a, and the conformable derivative D^a in exact and numeric form.
//
// On any differentiable f, D^a f(x) = x^(1-a) f'(x). Since D^a u = 1, a
// function written in u is differentiated by plain d/du, so the exact core
// never sees a.

#include "conlag/errors.hpp"
#include "conlag/poly.hpp"
#include "conlag/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conlag {

/// Conformable order, 0 < a <= 1.
class AlphaValue {
 public:
  explicit AlphaValue(double a) : value_(a) {
    if (!(a > 0.0 && a <= 1.0)) throw domain_error("alpha must lie in (0, 1], got " + std::to_string(a));
  }
  double value() const { return value_; }

  /// u = x^a / a.
  double reduce(double x) const { return std::pow(x, value_) / value_; }

  /// Inverse of reduce: x = (a u)^(1/a).
  double expand(double u) const { return std::pow(value_ * u, 1.0 / value_); }

 private:
  double value_;
};

struct ExpTerm {
  ReducedPoly poly;
  Rational rate;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/**
 * Finite sum of poly_i(u) * exp(rate_i * u).
 *
 * Canonical form: terms sorted by strictly increasing rate, no zero
 * polynomial parts. Every constructor and operation returns canonical values.
 */
class ExpPoly {
 public:
  ExpPoly() = default;

  /* implicit */ ExpPoly(ReducedPoly p) : ExpPoly(std::move(p), Rational(0)) {}

  ExpPoly(ReducedPoly p, Rational rate) {
    if (!p.is_zero()) terms_.push_back({std::move(p), std::move(rate)});
  }

  /// Merges equal rates and drops zero parts.
  static ExpPoly from_terms(std::vector<ExpTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    ExpPoly out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().rate == t.rate) {
        out.terms_.back().poly += t.poly;
        if (out.terms_.back().poly.is_zero()) out.terms_.pop_back();
      } else if (!t.poly.is_zero()) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  static ExpPoly exp(const Rational& rate) { return ExpPoly(ReducedPoly{1}, rate); }

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The polynomial when the value has no exponential factor (or is zero).
  std::optional<ReducedPoly> as_plain() const {
    if (terms_.empty()) return ReducedPoly{};
    if (terms_.size() == 1 && terms_.front().rate == 0) return terms_.front().poly;
    return std::nullopt;
  }

  /// Exact value at u = 0.
  Rational value_at_zero() const {
    Rational v = 0;
    for (const auto& t : terms_) v += t.poly.coeff(0);
    return v;
  }

  ExpPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.poly *= c;
    return *this;
  }

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(all));
  }

  friend ExpPoly operator-(ExpPoly a) {
    for (auto& t : a.terms_) t.poly = -t.poly;
    return a;
  }

  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

  friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
  friend ExpPoly operator*(const Rational& c, ExpPoly a) { return a *= c; }

  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpTerm> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) all.push_back({x.poly * y.poly, x.rate + y.rate});
    return from_terms(std::move(all));
  }

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      if (t.rate == 0) {
        out += "(" + t.poly.to_string() + ")";
      } else {
        out += "(" + t.poly.to_string() + ")*exp(" + conlag::to_string(t.rate) + "*u)";
      }
    }
    return out;
  }

 private:
  std::vector<ExpTerm> terms_;
};

inline ExpPoly add(const ExpPoly& p, const ExpPoly& q) { return p + q; }
inline ExpPoly mul(const ExpPoly& p, const ExpPoly& q) { return p * q; }

/// Re-runs canonicalization on an already canonical value.
inline ExpPoly canonicalize(const ExpPoly& p) { return ExpPoly::from_terms(p.terms()); }

/// D^a on the reduced form: (p'(u) + rate p(u)) e^(rate u) per term.
inline ExpPoly d_alpha_exact(const ExpPoly& p) {
  std::vector<ExpTerm> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({t.poly.derivative() + t.poly * t.rate, t.rate});
  return ExpPoly::from_terms(std::move(out));
}

inline ExpPoly d_alpha_n(ExpPoly p, unsigned n) {
  for (unsigned i = 0; i < n && !p.is_zero(); ++i) p = d_alpha_exact(p);
  return p;
}

/**
 * Central-difference estimate of the conformable derivative limit,
 *
 *   [f(x + h x^(1-a)) - f(x - h x^(1-a))] / (2h),
 *
 * with O(h^2) error for smooth f. Throws domain_error for x <= 0 or h <= 0.
 */
template <class F>
double d_alpha_numeric(F&& f, double x, AlphaValue alpha, double h) {
  if (!(x > 0.0)) throw domain_error("d_alpha_numeric requires x > 0");
  if (!(h > 0.0)) throw domain_error("d_alpha_numeric requires h > 0");
  const double step = h * std::pow(x, 1.0 - alpha.value());
  return (f(x + step) - f(x - step)) / (2.0 * h);
}

/// Sum of poly_i(u) e^(rate_i u) at u = x^a/a; x = 0 is taken by continuity.
inline double eval(const ExpPoly& p, double x, AlphaValue alpha) {
  if (x < 0.0) throw domain_error("eval requires x >= 0");
  const double u = x == 0.0 ? 0.0 : alpha.reduce(x);
  double sum = 0.0;
  for (const auto& t : p.terms()) {
    const double e = t.rate == 0 ? 1.0 : std::exp(to_double(t.rate) * u);
    sum += t.poly.evaluate(u) * e;
  }
  return sum;
}

/// One term c * a^(alpha_power) * x^(k a) of the x-space presentation.
struct XViewTerm {
  unsigned k = 0;
  Rational rational_part;
  int alpha_power = 0;

  friend bool operator==(const XViewTerm&, const XViewTerm&) = default;
};

/// Presentation form: u^k = x^(k a) / a^k.
inline std::vector<XViewTerm> x_view(const ReducedPoly& p) {
  std::vector<XViewTerm> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeff(k) == 0) continue;
    out.push_back({static_cast<unsigned>(k), p.coeff(k), -static_cast<int>(k)});
  }
  return out;
}

/// Inverse of x_view. Terms must carry alpha_power == -k.
inline ReducedPoly reduce(const std::vector<XViewTerm>& terms) {
  ReducedPoly p;
  for (const auto& t : terms) {
    if (t.alpha_power != -static_cast<int>(t.k))
      throw domain_error("x-view term x^(" + std::to_string(t.k) + "*a) must carry a^(-" +
                         std::to_string(t.k) + ")");
    p += ReducedPoly::monomial(t.rational_part, t.k);
  }
  return p;
}

/// "c * a^(-k) * x^(k*a)" per term, joined by " + ".
inline std::string render_x_view(const std::vector<XViewTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(t.rational_part) + " * a^(" + std::to_string(t.alpha_power) + ") * x^(" +
           std::to_string(t.k) + "*a)";
  }
  return out;
}

inline std::string render_x_view(const ReducedPoly& p) { return render_x_view(x_view(p)); }

}  // namespace conlag
