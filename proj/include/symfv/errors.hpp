#pragma once

#include <stdexcept>
#include <string>

namespace symfv {

enum class ErrorKind {
  NonPositiveDensity,
  NonPositivePressure,
  ImaginarySoundSpeed,
  DegenerateWaveFan,
  WindowTooSmall,
  ShapeMismatch,
  UnphysicalState,
  MalformedFile,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the time integrator; carries the offending cell and step.
class UnphysicalStateError : public SolverError {
 public:
  UnphysicalStateError(int i, int j, long step, const std::string& detail);

  int i;
  int j;
  long step;
};

}  // namespace symfv
