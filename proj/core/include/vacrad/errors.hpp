#pragma once

#include <stdexcept>
#include <string>

namespace vacrad {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// A catalogue lookup failed (unknown key).
class lookup_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Inputs are mathematically fine but outside the physical regime a
/// formula is valid in.
class validity_error : public error {
 public:
  using error::error;
};

/// The simulator detected an internally inconsistent state (missed
/// collision, overlap, non-monotone event times).
class integrity_error : public error {
 public:
  using error::error;
};

}  // namespace vacrad
