#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

enum class Errc {
  ZeroInversion,
  RingMismatch,
  NonUnitConstantTerm,
  IncompleteSplitting,
  InfiniteStabilizer,
  NegativeMultiplicity,
  NonIntegralMultiplicity,
  NotASubset,
  EmptyPairLocus,
  StackMismatch,
  NonHomogeneous,
  ConductorTooSmall,
  SingularRestriction,
  ParseError,
  ValidationError,
  UnknownBundleName,
  UnsupportedCombination,
};

const char* errc_name(Errc c);

// True for conditions that indicate a broken internal invariant rather than
// bad user input; the CLI maps these to exit code 2.
bool errc_is_internal(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace inertia
