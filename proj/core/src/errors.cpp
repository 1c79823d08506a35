#include "ade/errors.hpp"

namespace ade {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::TowerLevelMismatch: return "TowerLevelMismatch";
    case Errc::TowerHeightExceeded: return "TowerHeightExceeded";
    case Errc::IrreducibleDegreeTooHigh: return "IrreducibleDegreeTooHigh";
    case Errc::FactorizationFailed: return "FactorizationFailed";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::PositiveDimensionalSingularLocus: return "PositiveDimensionalSingularLocus";
    case Errc::EliminationNotTriangular: return "EliminationNotTriangular";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::NotDoublePoint: return "NotDoublePoint";
    case Errc::PointNotSingular: return "PointNotSingular";
    case Errc::PointNotOnY: return "PointNotOnY";
    case Errc::PointOutsideTorus: return "PointOutsideTorus";
    case Errc::PointOnSingularAmbientLocus: return "PointOnSingularAmbientLocus";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NonSimplicialFan: return "NonSimplicialFan";
    case Errc::UnboundedPolytope: return "UnboundedPolytope";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::string compose(Errc code, const std::string& message, const std::string& where) {
  std::string out;
  if (!where.empty()) {
    out += where;
    out += ": ";
  }
  out += errc_name(code);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(Errc code, std::string message, std::string where)
    : std::runtime_error(compose(code, message, where)), code_(code), where_(std::move(where)) {}

void fail(Errc code, std::string message, std::string where) {
  throw Error(code, std::move(message), std::move(where));
}

}  // namespace ade
