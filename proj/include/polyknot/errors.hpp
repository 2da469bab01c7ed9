#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyknot {

enum class ErrorKind {
  InvalidArgument,
  NonFinite,
  PolygonTooSmall,
  ZeroLengthSegment,
  DegenerateContact,
  DegenerateConfiguration,
  NonGeneric,
  NotEmbedded,
  PerturbationFailed,
  SamplingFailed,
  TooManyCrossings,
  IndexOutOfRange,
  DegenerateAxis,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyknot
