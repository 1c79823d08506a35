#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ade {

enum class Errc {
  NotDivisible,
  VariableMismatch,
  TowerLevelMismatch,
  TowerHeightExceeded,
  IrreducibleDegreeTooHigh,
  FactorizationFailed,
  ZeroDivisor,
  PositiveDimensionalSingularLocus,
  EliminationNotTriangular,
  DepthExceeded,
  NotDoublePoint,
  PointNotSingular,
  PointNotOnY,
  PointOutsideTorus,
  PointOnSingularAmbientLocus,
  HypothesisViolated,
  NonSimplicialFan,
  UnboundedPolytope,
  SyntaxError,
  SchemaError,
  InvalidModel,
  Internal,
};

std::string_view errc_name(Errc c);

/// Error with a machine-readable code plus the module/operation that raised it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::string where = {});
  Errc code() const { return code_; }
  const std::string& where() const { return where_; }

 private:
  Errc code_;
  std::string where_;
};

[[noreturn]] void fail(Errc code, std::string message, std::string where = {});

}  // namespace ade
