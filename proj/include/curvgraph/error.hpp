#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvgraph {

/// Failure categories shared by every module. The numeric values are part of
/// the C ABI (see curvgraph.h) and must not be reordered.
enum class ErrorCode : int {
  Ok = 0,
  InvalidInput = 1,
  LoopEdge = 2,
  MultiEdge = 3,
  Leaf = 4,
  AsymmetricAdjacency = 5,
  Disconnected = 6,
  InvalidFace = 7,
  RadiusExceedsGraph = 8,
  NoInteriorMarked = 9,
  EmptySet = 10,
  DisconnectedInducedSubgraph = 11,
  HorizonExceeded = 12,
  NotFaceRegular = 13,
  ParameterOutOfRange = 14,
  ResourceLimit = 15,
  GenerationFailed = 16,
  NotACorner = 17,
  BoundaryVertex = 18,
  NoInterior = 19,
  NonpositiveCurvatureGap = 20,
  NonIntegerSigma = 21,
  NonPositiveSigma = 22,
  NoSignChange = 23,
  PositiveCurvature = 24,
  RootFindingFailure = 25,
  LengthMismatch = 26,
  DomainError = 27,
  BoundExceedsOne = 28,
  ConvergenceFailure = 29,
  Io = 30,
  Internal = 31,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace curvgraph
