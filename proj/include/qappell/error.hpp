#pragma once

#include <stdexcept>
#include <string>

namespace qappell {

enum class ErrorCode {
  NotSymmetric,
  ZeroScale,
  NotDivisible,
  BadParameter,
  BadIndex,
  ZeroC,
  HorizonExceeded,
  Inadmissible,
  PoleInFamily,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for every failure in the library; `code()` says
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qappell
