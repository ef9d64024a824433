#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace afcore {

enum class ErrorKind {
  InvalidInput,
  CyclicInput,
  InfiniteMultiplicity,
  UnknownVertex,
  NotHereditary,
  NotSaturated,
  CertificateFailure,
  DimensionMismatch,
  SizeExceeded,
  NotFiniteType,
  NonUniqueMinimum,
  IndexOutOfRange,
  IllegalMove,
  UnboundSymbol,
  DegreeMismatch,
  TruncationTooSmall,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to an exit code and tests can assert on the exact cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace afcore
