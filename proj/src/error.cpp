#include "laxmilgram/error.hpp"

namespace laxmilgram {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::NotAContraction: return "NotAContraction";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::InvalidContraction: return "InvalidContraction";
    case ErrorCode::RankDeficientBasis: return "RankDeficientBasis";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotCoercive: return "NotCoercive";
    case ErrorCode::InconsistentConstants: return "InconsistentConstants";
    case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::MeshInvalid: return "MeshInvalid";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void require_dim(std::size_t got, std::size_t expected, std::string_view what) {
  if (got != expected) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has dimension " + std::to_string(got) + ", expected " +
                    std::to_string(expected));
  }
}

}  // namespace laxmilgram
