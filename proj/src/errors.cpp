#include "cet/errors.hpp"

namespace cet {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::FrameTooLarge: return "FrameTooLarge";
    case Errc::EmptyFocal: return "EmptyFocal";
    case Errc::ZeroPhaseUndefined: return "ZeroPhaseUndefined";
    case Errc::DegenerateMass: return "DegenerateMass";
    case Errc::InvalidSpeed: return "InvalidSpeed";
    case Errc::TotalConflict: return "TotalConflict";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::UnknownModel: return "UnknownModel";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::NonNumericFeature: return "NonNumericFeature";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::DegenerateStats: return "DegenerateStats";
    case Errc::BadDocument: return "BadDocument";
    case Errc::DuplicateSet: return "DuplicateSet";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::EmptySetMass: return "EmptySetMass";
    case Errc::SumViolation: return "SumViolation";
    case Errc::MagnitudeViolation: return "MagnitudeViolation";
    case Errc::FocalOutOfRange: return "FocalOutOfRange";
  }
  return "UnknownError";
}

}  // namespace cet
