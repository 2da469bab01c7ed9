#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "polyknot/diagram.hpp"
#include "polyknot/polygon.hpp"

namespace polyknot {

struct HullRelabeling {
  /// Original index (0-based) of the vertex moved to position 0.
  std::size_t pivot_index = 0;
  /// Unit normal n with (v - v_pivot) . n > 0 for every other vertex v.
  Vec3 supporting_plane_normal;
  /// min over other vertices of the angle-sine between (v - v_pivot) and the
  /// supporting plane; how strictly the pivot is extreme.
  double margin = 0.0;
};

/// Unit normal of a plane through p[i] with every other vertex strictly on
/// its positive side, chosen to maximise the worst angular margin. Empty if
/// no such plane exists with margin above tol.eps().
std::optional<HullRelabeling> supporting_plane(const Polygon& p, std::size_t i, const Tolerance& tol = {});

/// Rotates labels so that the lowest-index hull-extreme vertex comes first.
/// Throws Error(NonGeneric) if no vertex is strictly extreme.
std::pair<Polygon, HullRelabeling> hull_relabel(const Polygon& p, const Tolerance& tol = {});

/// Radial projection from v1 onto the unit sphere around it, with the two
/// extreme arcs extended to the equator of the supporting hemisphere and
/// closed along it. The nearer strand is over. Requires v1 to be strictly
/// extreme (else NonGeneric); throws Error(NonGeneric) on tangencies,
/// crossings at arc endpoints, triple points or equal depths.
Diagram radial_diagram(const Polygon& p, const Tolerance& tol = {});

/// Orthogonal projection along v2 - v1, which collapses edge v1v2 to a
/// point and leaves an (n-1)-sided plane diagram. The strand further along
/// v2 - v1 is over. Throws Error(NonGeneric).
Diagram orthogonal_diagram(const Polygon& p, const Tolerance& tol = {});

/// hull_relabel followed by radial_diagram.
Diagram project_radial(const Polygon& p, const Tolerance& tol = {});

/// (n-3)(n-4)/2. Throws Error(InvalidArgument) for n < 3.
int crossing_bound(int n);

/// (n-1)(n-4)/2, the classical edge-on bound. Throws for n < 3.
int orthogonal_crossing_bound(int n);

}  // namespace polyknot
