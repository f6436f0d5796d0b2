#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the support of the function (e.g. |x| > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameters violate the family constraints (c > 0, |a_i| < 1, ...).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Closed partial-fraction forms need pairwise distinct parameters.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// A zero parameter where 1/a_i is required.
class ZeroParameter : public Error {
 public:
  using Error::Error;
};

// No closed form is available for the requested size.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A closed form failed an internal self-consistency check.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// Quadrature exhausted its evaluation budget before reaching tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Tensor and Monte-Carlo estimates differ beyond their combined error bars.
class EstimatorDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace gkm
