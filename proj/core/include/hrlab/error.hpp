#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hrlab {

enum class ErrorKind {
  VariableMismatch,
  NonUnitLeadingTerm,
  UnsupportedWeight,
  DimensionMismatch,
  TruncationUnderflow,
  UnsupportedChart,
  ChartMismatch,
  OddSize,
  SingularCocycle,
  NotInStarCell,
  NotParabolic,
  SizeMismatch,
  OutsideLeafDomain,
  PathLeavesDomain,
  StepTooLarge,
  InsufficientSamples,
  InvalidField,
  NotInGroup,
  NotInInverseDifferent,
  NotSiegel,
  UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hrlab
