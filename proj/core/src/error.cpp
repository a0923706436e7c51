#include "mism/error.hpp"

namespace mism {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FileNotFound: return "file-not-found";
    case ErrorKind::UnsupportedFormat: return "unsupported-format";
    case ErrorKind::EmptyMask: return "empty-mask";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NoMatchingPairs: return "no-matching-pairs";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::UnknownMetric: return "unknown-metric";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace mism
