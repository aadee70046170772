#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonia {

enum class ErrorCode {
  // exact fields
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  ParseError,
  // projective core
  ZeroVector,
  NotPlucker,
  CoincidentArguments,
  DegenerateSpan,
  LineInPlane,
  PointOnLine,
  CoincidentLines,
  NotCoplanar,
  DimensionMismatch,
  SingularMatrix,
  // harmonicity
  NotCollinear,
  NotConcurrent,
  CoincidentBase,
  DegenerateAuxiliaries,
  CharacteristicTwo,
  ArgumentOffLine,
  IncidentCenterMirror,
  NotATriangle,
  NotAQuadrangle,
  // harmonic curves
  DegenerateTangentData,
  NotOnCurve,
  DegeneratePointSet,
  PoleOnCurve,
  CoincidentPoints,
  Unsupported,
  // ruled surfaces
  PointOnGenerator,
  CoplanarGenerators,
  PlaneNotThroughGenerator,
  PointNotOnGenerator,
  NotRulesOfR,
  PointOnSurface,
  PointNotOnSurface,
  TangentPlane,
  DegenerateConfiguration,
  DegenerateLiftChoice,
  DegenerateHexagon,
  // finite models / cli
  BudgetExceeded,
  ConfigInvalid,
  UnrepresentableElement,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace harmonia
