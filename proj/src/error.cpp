#include "qappell/error.hpp"

namespace qappell {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::ZeroC: return "ZeroC";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::PoleInFamily: return "PoleInFamily";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qappell
