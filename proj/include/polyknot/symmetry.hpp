#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "polyknot/polygon.hpp"

namespace polyknot {

/// r: <v1, v2, ..., vn> -> <v1, vn, ..., v2>.
Polygon reverse(const Polygon& p);

/// s^k: vertex i of the result is vertex (i + k) mod n of p.
/// Throws Error(IndexOutOfRange) unless 0 <= k < n.
Polygon rotate_labels(const Polygon& p, std::size_t k);

/// Reflection through the plane z = 0.
Polygon mirror(const Polygon& p);

struct Reverse {};
struct Rotate {
  std::size_t k = 0;
};
struct Mirror {};

using LabelAction = std::variant<Reverse, Rotate, Mirror>;

Polygon apply(const LabelAction& action, const Polygon& p);

/// Parses "reverse", "mirror" or "rotate:k". Throws Error(ParseError).
LabelAction parse_label_action(const std::string& text);

}  // namespace polyknot
