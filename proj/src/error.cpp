#include "afcore/error.hpp"

namespace afcore {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CyclicInput: return "CyclicInput";
    case ErrorKind::InfiniteMultiplicity: return "InfiniteMultiplicity";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NonUniqueMinimum: return "NonUniqueMinimum";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace afcore
