#include "symfv/errors.hpp"

namespace symfv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveDensity:
      return "NonPositiveDensity";
    case ErrorKind::NonPositivePressure:
      return "NonPositivePressure";
    case ErrorKind::ImaginarySoundSpeed:
      return "ImaginarySoundSpeed";
    case ErrorKind::DegenerateWaveFan:
      return "DegenerateWaveFan";
    case ErrorKind::WindowTooSmall:
      return "WindowTooSmall";
    case ErrorKind::ShapeMismatch:
      return "ShapeMismatch";
    case ErrorKind::UnphysicalState:
      return "UnphysicalState";
    case ErrorKind::MalformedFile:
      return "MalformedFile";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

UnphysicalStateError::UnphysicalStateError(int i_, int j_, long step_, const std::string& detail)
    : SolverError(ErrorKind::UnphysicalState, "cell (" + std::to_string(i_) + ", " + std::to_string(j_) +
                                                  ") at step " + std::to_string(step_) + ": " + detail),
      i(i_),
      j(j_),
      step(step_) {}

}  // namespace symfv
