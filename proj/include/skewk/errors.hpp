#pragma once

#include <stdexcept>
#include <string>

namespace skewk {

/// Error categories raised by the library. Input/validation errors map to
/// CLI exit code 2; the *Failure codes signal violated internal invariants.
enum class ErrorCode {
  NonPrime,
  BoundExceeded,
  NoEmbedding,
  NotCoprime,
  InvalidAutomorphism,
  MismatchedGroup,
  MaschkeViolated,
  IncompatibleAction,
  TowerHypothesisViolated,
  UnknownLabel,
  DecompositionFailure,
  NotCommutative,
  SplittingFailure,
  NonSquareDimension,
  SplittingFieldTooLarge,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace skewk
