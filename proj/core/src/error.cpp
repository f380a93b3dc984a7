#include "hrlab/error.hpp"

namespace hrlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
    case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TruncationUnderflow: return "TruncationUnderflow";
    case ErrorKind::UnsupportedChart: return "UnsupportedChart";
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::OddSize: return "OddSize";
    case ErrorKind::SingularCocycle: return "SingularCocycle";
    case ErrorKind::NotInStarCell: return "NotInStarCell";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OutsideLeafDomain: return "OutsideLeafDomain";
    case ErrorKind::PathLeavesDomain: return "PathLeavesDomain";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotInInverseDifferent: return "NotInInverseDifferent";
    case ErrorKind::NotSiegel: return "NotSiegel";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace hrlab
