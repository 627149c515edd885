#include "inertia/errors.hpp"

namespace inertia {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroInversion: return "ZeroInversion";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::IncompleteSplitting: return "IncompleteSplitting";
    case Errc::InfiniteStabilizer: return "InfiniteStabilizer";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::NotASubset: return "NotASubset";
    case Errc::EmptyPairLocus: return "EmptyPairLocus";
    case Errc::StackMismatch: return "StackMismatch";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::ConductorTooSmall: return "ConductorTooSmall";
    case Errc::SingularRestriction: return "SingularRestriction";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownBundleName: return "UnknownBundleName";
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
  }
  return "UnknownError";
}

bool errc_is_internal(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::ValidationError:
    case Errc::UnknownBundleName:
    case Errc::UnsupportedCombination:
    case Errc::InfiniteStabilizer:
      return false;
    default:
      return true;
  }
}

}  // namespace inertia
