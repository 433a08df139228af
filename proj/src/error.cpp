#include "quintic/error.hpp"

namespace quintic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidConnectionSet: return "InvalidConnectionSet";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::InvalidInvolution: return "InvalidInvolution";
    case ErrorKind::NotQuintic: return "NotQuintic";
    case ErrorKind::NotInverseClosed: return "NotInverseClosed";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::ContainsIdentity: return "ContainsIdentity";
    case ErrorKind::NotAPerfectCode: return "NotAPerfectCode";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace quintic
