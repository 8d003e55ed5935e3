#pragma once

#include <stdexcept>
#include <string>

namespace splineframes {

/// Bad argument: out-of-range parameter, non-finite input, malformed file.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lattice parameters fall outside the region an operation is valid on.
class RegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural zero of G_m(x) turned out to be nonzero.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(const std::string& what, int ell, int k)
      : std::runtime_error(what), ell_(ell), k_(k) {}

  int ell() const noexcept { return ell_; }
  int k() const noexcept { return k_; }

 private:
  int ell_;
  int k_;
};

/// The matrix at x is numerically singular.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double x, double det)
      : std::runtime_error(what), x_(x), det_(det) {}

  double x() const noexcept { return x_; }
  double determinant() const noexcept { return det_; }

 private:
  double x_;
  double det_;
};

/// A proven invariant failed numerically; carries the offending point.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& what, double witness)
      : std::runtime_error(what), witness_(witness) {}

  double witness() const noexcept { return witness_; }

 private:
  double witness_;
};

}  // namespace splineframes
