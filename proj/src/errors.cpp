#include "polyknot/errors.hpp"

namespace polyknot {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::PolygonTooSmall: return "PolygonTooSmall";
    case ErrorKind::ZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorKind::DegenerateContact: return "DegenerateContact";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::NotEmbedded: return "NotEmbedded";
    case ErrorKind::PerturbationFailed: return "PerturbationFailed";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegenerateAxis: return "DegenerateAxis";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polyknot
