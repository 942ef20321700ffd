#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyntri {

enum class ErrorCode {
  // stream_core
  LoopEdge,
  OutOfUniverse,
  DuplicateInsert,
  DeleteAbsent,
  OverCapacity,
  ParseError,
  EmptyStream,
  // oracles / indep_paths
  NoTwoPaths,
  BudgetExceeded,
  NotConnected,
  HasIsolatedEdges,
  // f2_sketch
  SeedMismatch,
  SketchOverflow,
  // sparsifier
  InconsistentDelete,
  InconsistentInsert,
  // estimator
  InvalidRange,
  NoQualifiedCopies,
  // audits
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `position()` carries the
/// offending event index (library) or 1-based line number (parser), when
/// one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace dyntri
