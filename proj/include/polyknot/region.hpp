#pragma once

#include <string>
#include <vector>

#include "polyknot/polygon.hpp"

namespace polyknot {

/// Order in which the half-planes P2, ..., P(m-1) bounded by the axis through
/// the first and last vertex of a base polygon are met, rotating
/// right-handedly about the axis starting from the sector the base polygon
/// misses. Entries are 1-based vertex labels, e.g. {2, 4, 3}.
struct RegionCode {
  std::vector<int> word;

  /// "2-4-3".
  std::string str() const;
  bool operator==(const RegionCode&) const = default;
};

/// Throws Error(ParseError) unless `text` is a dash-separated permutation of
/// 2..k+1.
RegionCode parse_region_code(const std::string& text);

/// Angular position of a vertex about the axis, in radians.
struct HalfPlaneAngle {
  int label = 0;
  double angle = 0.0;
};

/// Half-plane angles of vertices 2..m-1 of `base` about the axis v1 -> vm.
/// The angle increases counterclockwise when viewed from the +axis side.
std::vector<HalfPlaneAngle> half_plane_angles(const Polygon& base, const Tolerance& tol = {});

/// Region code of a base polygon with m >= 4 vertices. Throws
/// Error(NonGeneric) when a vertex sits on the axis, an edge v2v3 ...
/// v(m-2)v(m-1) meets the axis, two half-planes coincide, or the chain winds
/// all the way around the axis so no empty sector exists.
RegionCode region_code_of_base(const Polygon& base, const Tolerance& tol = {});

}  // namespace polyknot
