#pragma once

#include <stdexcept>
#include <string>

namespace fent {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier, `what()` the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define FENT_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                          \
  public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

// linalg
FENT_DEFINE_ERROR(NotSquare)
FENT_DEFINE_ERROR(NotHermitian)
FENT_DEFINE_ERROR(ConvergenceFailure)
FENT_DEFINE_ERROR(NegativeEigenvalue)
FENT_DEFINE_ERROR(DimensionMismatch)
FENT_DEFINE_ERROR(NegativeProductEigenvalue)

// angular momentum
FENT_DEFINE_ERROR(InvalidQuantumNumbers)
FENT_DEFINE_ERROR(OddDimension)

// states
FENT_DEFINE_ERROR(NotOrthonormal)
FENT_DEFINE_ERROR(RepeatedIndex)
FENT_DEFINE_ERROR(DimensionTooLarge)
FENT_DEFINE_ERROR(ParameterOutOfRange)
FENT_DEFINE_ERROR(UnknownFamily)
FENT_DEFINE_ERROR(InvalidState)
FENT_DEFINE_ERROR(ParseError)

// entropy / criteria
FENT_DEFINE_ERROR(InvalidOrder)
FENT_DEFINE_ERROR(UnsupportedParticleCount)
FENT_DEFINE_ERROR(NotPure)

// concurrence
FENT_DEFINE_ERROR(WrongDimension)
FENT_DEFINE_ERROR(SupportLeak)

// scanner
FENT_DEFINE_ERROR(InvalidDimensions)
FENT_DEFINE_ERROR(PropertyViolation)

#undef FENT_DEFINE_ERROR

} // namespace fent
