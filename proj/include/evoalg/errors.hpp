// Exception hierarchy shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace evoalg {

/// Base class for every error raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix sizes.
class dimension_error : public error {
 public:
  using error::error;
};

/// Argument outside an operation's domain (empty list, negative count, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// Operation not available in the requested scalar backend.
class unsupported_backend_error : public error {
 public:
  using error::error;
};

/// gamma == 0: the weighted max norm degenerates to the zero functional.
class degenerate_norm_error : public error {
 public:
  using error::error;
};

/// Algebra is outside the classified family (not canonical maximal of rank n-1).
class not_classified_error : public error {
 public:
  using error::error;
};

/// Operation defined only for the other interior-entry case.
class not_applicable_error : public error {
 public:
  using error::error;
};

/// Parameters incompatible with the classification case.
class invalid_parameter_error : public error {
 public:
  using error::error;
};

class singular_matrix_error : public error {
 public:
  using error::error;
};

/// Real fractional power of a nonpositive base.
class branch_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

/// Exponential series exceeded its term cap without meeting the tolerance.
class series_limit_error : public error {
 public:
  using error::error;
};

}  // namespace evoalg
