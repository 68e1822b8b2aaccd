#include "fg/error.hpp"

namespace fg {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::Unsupported: return "Unsupported";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotSquareOrder: return "NotSquareOrder";
    case Errc::Guard: return "Guard";
    case Errc::FormInconsistent: return "FormInconsistent";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::Precondition: return "Precondition";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::SignError: return "SignError";
    case Errc::BadPartition: return "BadPartition";
    case Errc::PreconditionSize: return "PreconditionSize";
    case Errc::GuardCubic: return "GuardCubic";
    case Errc::NonIntegralK: return "NonIntegralK";
    case Errc::EpsilonRange: return "EpsilonRange";
    case Errc::GammaRange: return "GammaRange";
    case Errc::DomainError: return "DomainError";
    case Errc::EmptySet: return "EmptySet";
    case Errc::Parse: return "Parse";
    case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace fg
