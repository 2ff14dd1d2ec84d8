#pragma once

// Seeded generators of exact values for property checks.

#include "conlag/alpha_calc.hpp"
#include "conlag/rational.hpp"

#include <random>
#include <span>
#include <vector>

namespace conlag {

class RandomExact {
 public:
  explicit RandomExact(std::uint64_t seed) : rng_(seed) {}

  /// p/q with p in [-9, 9], q in [1, 6].
  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng_), den(rng_));
  }

  ReducedPoly poly(unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> c(deg(rng_) + 1);
    for (auto& x : c) x = rational();
    return ReducedPoly(std::move(c));
  }

  /// One to three terms, rates drawn from `rates`.
  ExpPoly exp_poly(unsigned max_degree, std::span<const Rational> rates) {
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, rates.size() - 1);
    std::vector<ExpTerm> terms;
    for (std::size_t i = count(rng_); i > 0; --i) terms.push_back({poly(max_degree), rates[pick(rng_)]});
    return ExpPoly::from_terms(std::move(terms));
  }

  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace conlag
