#pragma once

#include <array>
#include <string>

#include "polyknot/polygon.hpp"
#include "polyknot/region.hpp"

namespace polyknot {

/// Joint chirality-curl (Delta, Delta^2 * Curl). Five values occur:
/// (0,0) for unknots and (+-1, +-1) for the four trefoil classes.
struct JointClass {
  Sign chirality;
  Sign curlpart;

  bool operator==(const JointClass&) const = default;

  bool valid() const noexcept {
    return chirality.is_zero() ? curlpart.is_zero() : !curlpart.is_zero();
  }

  /// "unknot", "right-trefoil" or "left-trefoil".
  std::string knot_name() const;
};

enum class DeltaMode {
  /// Test only the two edges that can pierce the triangle.
  Fast,
  /// Test every edge; asserts that the remaining ones contribute nothing.
  Exhaustive,
};

/// Algebraic intersection number of the hexagon with the oriented open
/// triangle v(i-1) v(i) v(i+1), i in {2, 4, 6} (1-based labels).
/// Throws Error(DegenerateConfiguration) on any tolerance-level contact.
Sign triangle_delta(const Polygon& hex, int i, const Tolerance& tol = {}, DeltaMode mode = DeltaMode::Fast);

/// (Delta2, Delta4, Delta6).
std::array<Sign, 3> triangle_deltas(const Polygon& hex, const Tolerance& tol = {});

/// Delta2 * Delta4 * Delta6.
Sign chirality(const Polygon& hex, const Tolerance& tol = {});

/// Sign((v3 - v1) x (v5 - v1) . (v2 - v1)); zero when v1, v2, v3, v5 are
/// coplanar within tolerance.
Sign curl(const Polygon& hex, const Tolerance& tol = {});

/// Throws Error(NotEmbedded) for non-embedded input and propagates
/// Error(DegenerateConfiguration).
JointClass joint_class(const Polygon& hex, const Tolerance& tol = {});

/// Region code of forget_last(hex), a permutation of {2, 3, 4}.
RegionCode region_code_hex(const Polygon& hex, const Tolerance& tol = {});

}  // namespace polyknot
