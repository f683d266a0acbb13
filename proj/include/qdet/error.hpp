#pragma once

#include <stdexcept>
#include <string>

namespace qdet {

enum class ErrorCode {
  ParseError = 1,
  InvalidArgument,
  DivisionByZero,
  Pole,
  DegreeMismatch,
  ResourceLimit,
  RankNotEstablished,
  NotCompatible,
  NotHecke,
  NoBialgebraData,
  HostMismatch,
};

/// All recoverable failures are reported through this exception; the C API
/// translates the code into its status enum.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qdet
