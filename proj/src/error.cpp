#include "gft/error.hpp"

namespace gft {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::NonInvertible: return "division-by-noninvertible";
    case ErrorKind::RemovableSingularity: return "removable-singularity-violation";
    case ErrorKind::InvalidFunction: return "invalid-function";
    case ErrorKind::IndeterminateContour: return "indeterminate-contour";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::UnscannableCircle: return "unscannable-circle";
    case ErrorKind::DegenerateProbe: return "degenerate-probe";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace gft
