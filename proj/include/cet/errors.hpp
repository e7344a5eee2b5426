#pragma once

#include <stdexcept>
#include <string>

namespace cet {

// Every domain failure maps to one of these codes. The names are part of the
// public surface: the CLI and the C API report them verbatim.
enum class Errc {
  InvalidArgument,
  InvalidFrame,
  FrameMismatch,
  FrameTooLarge,
  EmptyFocal,
  ZeroPhaseUndefined,
  DegenerateMass,
  InvalidSpeed,
  TotalConflict,
  InvalidDistribution,
  UnknownModel,
  MissingLabel,
  NonNumericFeature,
  EmptyDataset,
  DegenerateStats,
  BadDocument,
  DuplicateSet,
  UnknownLabel,
  EmptySetMass,
  SumViolation,
  MagnitudeViolation,
  FocalOutOfRange,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cet
