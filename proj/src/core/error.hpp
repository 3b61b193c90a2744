#pragma once

#include <stdexcept>
#include <string>

namespace apurity {

// Mirrors ap_status in the public C header; values double as CLI exit codes.
enum class ErrorKind {
  Mismatch = 1,
  InvalidArgument = 2,
  SizeCap = 3,
  NotStabilized = 4,
  Io = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace apurity
