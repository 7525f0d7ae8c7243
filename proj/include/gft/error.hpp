#pragma once

#include <stdexcept>
#include <string>

namespace gft {

enum class ErrorKind {
  ContractViolation,
  NonInvertible,
  RemovableSingularity,
  InvalidFunction,
  IndeterminateContour,
  InvalidSpec,
  Pole,
  UnscannableCircle,
  DegenerateProbe,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gft
