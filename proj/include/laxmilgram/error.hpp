#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace laxmilgram {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  DimensionMismatch,
  DegenerateSample,
  NotAContraction,
  MaxIterationsExceeded,
  InvalidContraction,
  RankDeficientBasis,
  BudgetExceeded,
  NotCoercive,
  InconsistentConstants,
  RhoOutOfRange,
  SingularSystem,
  MeshInvalid,
  UnknownCase,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base class of every error raised by the library. The code identifies the
/// failed precondition; the message carries the offending values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Throws DimensionMismatch unless `got == expected`.
void require_dim(std::size_t got, std::size_t expected, std::string_view what);

}  // namespace laxmilgram
