#pragma once

#include <stdexcept>
#include <string>

namespace clusterf2 {

enum class ErrorCode {
  InvalidParameter,  // out-of-range m, q, rank, ...
  InvalidArgument,   // structurally bad value (mismatched m, malformed label vector)
  NotADiagonal,
  InvalidMove,
  NotAcyclic,
  Resource,          // guard exceeded
  NoCover,           // deep point handed to the covering algorithms
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace clusterf2
