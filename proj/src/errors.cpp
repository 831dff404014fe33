#include "bhat/errors.hpp"

namespace bhat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::ZeroDivisorInput: return "ZeroDivisorInput";
    case ErrorKind::FitUnstable: return "FitUnstable";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::SuperficialityNotObserved: return "SuperficialityNotObserved";
    case ErrorKind::InternalIdentityFailure: return "InternalIdentityFailure";
    case ErrorKind::StabilizationNotReached: return "StabilizationNotReached";
    case ErrorKind::AlphaMismatch: return "AlphaMismatch";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::WindowInconclusive: return "WindowInconclusive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bhat
