#include "clusterf2/error.hpp"

namespace clusterf2 {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NotADiagonal: return "not-a-diagonal";
    case ErrorCode::InvalidMove: return "invalid-move";
    case ErrorCode::NotAcyclic: return "not-acyclic";
    case ErrorCode::Resource: return "resource";
    case ErrorCode::NoCover: return "no-cover";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace clusterf2
