#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyknot/diagram.hpp"
#include "polyknot/laurent.hpp"
#include "polyknot/polygon.hpp"

namespace polyknot {

/// Largest diagram the state sum accepts.
inline constexpr std::size_t kMaxBracketCrossings = 16;

/// Kauffman bracket in A, normalised so the crossingless circle is 1 and
/// each extra loop contributes -A^2 - A^-2. Throws Error(TooManyCrossings).
LaurentPolynomial kauffman_bracket(const Diagram& d);

/// Jones polynomial in t = A^-4: (-A)^(-3w) <D>.
LaurentPolynomial jones(const Diagram& d);

/// |V(-1)|.
std::int64_t determinant(const Diagram& d);

/// Knot names: "unknot", "3_1", "4_1", ..., "8_20", the composites
/// "3_1#3_1" (granny) and "3_1#-3_1" (square), "unknown". A leading '-'
/// marks the mirror of the tabulated chirality; "3_1" is the right-handed
/// trefoil, and for the other chiral knots the unprefixed name is the one
/// whose Jones polynomial has its larger exponents positive.
struct KnotType {
  std::string name = "unknown";

  bool known() const { return name != "unknown"; }
  bool operator==(const KnotType&) const = default;
};

struct KnotTableEntry {
  KnotType type;
  std::string description;
  LaurentPolynomial jones;
  std::int64_t determinant = 0;
};

/// Frozen lookup table, mirrors included.
const std::vector<KnotTableEntry>& knot_table();

struct Identification {
  KnotType type;
  LaurentPolynomial jones;
  std::int64_t determinant = 0;
  std::size_t crossings = 0;
  int writhe = 0;
};

Identification identify(const Diagram& d);

/// Mirror name: "3_1" <-> "-3_1", amphichiral names map to themselves.
KnotType mirror_type(const KnotType& k);

/// Identification from the radial diagram of the hull-relabeled polygon.
/// Propagates Error(NonGeneric) so callers can perturb and retry.
Identification identify_polygon(const Polygon& p, const Tolerance& tol = {});

}  // namespace polyknot
