#pragma once

#include "conlag/errors.hpp"
#include "conlag/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace conlag {

/**
 * Power series in t truncated after t^order, with coefficients in any
 * commutative ring Coeff that is constructible from Rational (ReducedPoly,
 * Rational itself).
 */
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t n) const { return coeffs_.at(n); }
  Coeff& operator[](std::size_t n) { return coeffs_.at(n); }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    for (std::size_t n = 0; n <= a.order(); ++n) a.coeffs_[n] += b.coeffs_.at(n);
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
      for (std::size_t j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_.at(j);
    return out;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  /// 1/(1 - t)^power = sum_k C(k + power - 1, k) t^k.
  static TruncatedSeries inverse_one_minus_t_pow(std::size_t order, unsigned power) {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k <= order; ++k) {
      out.coeffs_[k] = Coeff(Rational(power == 0 ? Integer(k == 0 ? 1 : 0)
                                                 : binomial(static_cast<unsigned>(k) + power - 1,
                                                            static_cast<unsigned>(k))));
    }
    return out;
  }

  /// exp(w) = sum_j w^j / j!, requiring w(0) = 0 so the sum terminates at
  /// j = order.
  static TruncatedSeries exp(const TruncatedSeries& w) {
    if (!(w.coeffs_[0] == Coeff{})) throw domain_error("exp of a series needs a zero constant term");
    TruncatedSeries out(w.order());
    TruncatedSeries power(w.order());
    power.coeffs_[0] = Coeff(Rational(1));
    for (std::size_t j = 0; j <= w.order(); ++j) {
      out = out + power * Rational(1, factorial(static_cast<unsigned>(j)));
      power = power * w;
    }
    return out;
  }

 private:
  std::vector<Coeff> coeffs_;
};

}  // namespace conlag
