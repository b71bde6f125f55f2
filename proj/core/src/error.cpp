#include "rigidity/error.hpp"

namespace rigidity {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIncompatibleFields: return "incompatible-fields";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kMixedVariants: return "mixed-variants";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kResourceLimit: return "resource-limit";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kApproximateInput: return "approximate-input";
    case ErrorCode::kCertificateInapplicable: return "certificate-inapplicable";
    case ErrorCode::kCertificateFailed: return "certificate-failed";
    case ErrorCode::kCertificateMismatch: return "certificate-mismatch";
    case ErrorCode::kRefutationNotGuaranteed: return "refutation-not-guaranteed";
    case ErrorCode::kNoCertificate: return "no-certificate";
    case ErrorCode::kInconsistentInterval: return "inconsistent-interval";
  }
  return "unknown";
}

}  // namespace rigidity
