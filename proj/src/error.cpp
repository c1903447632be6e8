#include "curvgraph/error.hpp"

namespace curvgraph {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::Leaf: return "Leaf";
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidFace: return "InvalidFace";
    case ErrorCode::RadiusExceedsGraph: return "RadiusExceedsGraph";
    case ErrorCode::NoInteriorMarked: return "NoInteriorMarked";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DisconnectedInducedSubgraph: return "DisconnectedInducedSubgraph";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::NotFaceRegular: return "NotFaceRegular";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NotACorner: return "NotACorner";
    case ErrorCode::BoundaryVertex: return "BoundaryVertex";
    case ErrorCode::NoInterior: return "NoInterior";
    case ErrorCode::NonpositiveCurvatureGap: return "NonpositiveCurvatureGap";
    case ErrorCode::NonIntegerSigma: return "NonIntegerSigma";
    case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::PositiveCurvature: return "PositiveCurvature";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BoundExceedsOne: return "BoundExceedsOne";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace curvgraph
