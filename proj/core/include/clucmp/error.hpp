#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clucmp {

enum class ErrorCode {
  EmptyInput,
  EmptyCluster,
  DuplicateCluster,
  CyclicHierarchy,
  UnknownClusterInDAG,
  UniverseMismatch,
  NotAPartition,
  NonStochasticGraph,
  NoConvergence,
  MeasureInputUnsupported,
  DegenerateARI,
  EmptySet,
  TooFewClusterings,
  IndivisibleSize,
  NoSuchLevel,
  InvalidArgument,
  UnknownMeasure,
  UnknownScenario,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// front ends (the CLI, host-language wrappers) can map them without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace clucmp
