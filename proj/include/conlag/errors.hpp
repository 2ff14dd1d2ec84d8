#pragma once

#include <stdexcept>
#include <string>

namespace conlag {

/// Argument outside the mathematical domain of an operation (x <= 0 for the
/// numeric conformable derivative, s outside a transform's region, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Laplace image requested for a rate at or beyond the abscissa of
/// convergence in strict mode.
class convergence_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An improper integral over [0, inf) that does not converge.
class divergence_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A transform with a nonzero polynomial part has no inverse in the
/// exp-polynomial function class.
class not_invertible_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. These signal algebra bugs, never
/// bad user input.
class algebra_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace conlag
