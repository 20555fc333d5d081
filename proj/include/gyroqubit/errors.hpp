#pragma once

#include <stdexcept>
#include <string>

namespace gyroqubit {

/// Base class for every error raised by the library. `code()` is a stable
/// identifier used in machine-readable output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Input lies outside the mathematical domain of an operation
/// (boundary vector, non-positive spectrum, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller asked for something that does not exist (unknown suite id).
class UsageError : public Error {
 public:
  using Error::Error;
};

#define GYROQUBIT_DOMAIN_ERROR(Name)                                 \
  class Name : public DomainError {                                  \
   public:                                                           \
    explicit Name(const std::string& detail) : DomainError(#Name, detail) {} \
  }

GYROQUBIT_DOMAIN_ERROR(BoundaryVector);
GYROQUBIT_DOMAIN_ERROR(NormExceedsOne);
GYROQUBIT_DOMAIN_ERROR(NonPositiveSpectrum);
GYROQUBIT_DOMAIN_ERROR(NotPositiveDefinite);
GYROQUBIT_DOMAIN_ERROR(NotPositive);
GYROQUBIT_DOMAIN_ERROR(NotTraceOne);
GYROQUBIT_DOMAIN_ERROR(NotHermitian);
GYROQUBIT_DOMAIN_ERROR(SingularFactor);
GYROQUBIT_DOMAIN_ERROR(OutOfRange);

#undef GYROQUBIT_DOMAIN_ERROR

class UnknownSuite : public UsageError {
 public:
  explicit UnknownSuite(const std::string& id)
      : UsageError("UnknownSuite", "unknown suite id '" + id + "'") {}
};

}  // namespace gyroqubit
