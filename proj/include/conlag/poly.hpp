#pragma once

#include "conlag/errors.hpp"
#include "conlag/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conlag {

/// Variable tags. The tag keeps polynomials in u (the reduced variable
/// x^a/a) and polynomials in the Laplace variable s from mixing.
struct UVar {
  static constexpr const char* name = "u";
};
struct SVar {
  static constexpr const char* name = "s";
};

/**
 * Dense univariate polynomial with exact rational coefficients.
 *
 * coeffs()[k] is the coefficient of var^k. The representation is kept
 * canonical: the highest stored coefficient is nonzero, and the zero
 * polynomial stores nothing.
 */
template <class Var>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit Polynomial(const Rational& c) : Polynomial(std::vector<Rational>{c}) {}

  static Polynomial constant(const Rational& c) { return Polynomial(c); }

  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::size_t size() const { return coeffs_.size(); }

  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * k;
    return Polynomial(std::move(out));
  }

  Polynomial derivative(unsigned n) const {
    Polynomial p = *this;
    for (unsigned i = 0; i < n && !p.is_zero(); ++i) p = p.derivative();
    return p;
  }

  /// Multiplies by var^k.
  Polynomial shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> out(k, Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  /// Exact division by var^k; throws algebra_error if var^k does not divide.
  Polynomial divided_by_power(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) {
        throw algebra_error(std::string(Var::name) + "^" + std::to_string(k) +
                            " does not divide the polynomial");
      }
    }
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  /// Coefficients of p(var + a), by repeated synthetic division.
  Polynomial taylor_shift(const Rational& a) const {
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    return Polynomial(std::move(c));
  }

  /// Human-readable form, highest power first: "1/2*u^2 - 2*u + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += conlag::to_string(mag);
        continue;
      }
      if (mag != 1) out += conlag::to_string(mag) + "*";
      out += Var::name;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

using ReducedPoly = Polynomial<UVar>;
using SPoly = Polynomial<SVar>;

}  // namespace conlag
