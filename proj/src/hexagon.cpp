#include "polyknot/hexagon.hpp"

#include "polyknot/errors.hpp"

namespace polyknot {

namespace {

void require_hexagon(const Polygon& p) {
  if (p.size() != 6) throw Error(ErrorKind::InvalidArgument, "expected a hexagon (n = 6)");
}

}  // namespace

std::string JointClass::knot_name() const {
  if (chirality.value() > 0) return "right-trefoil";
  if (chirality.value() < 0) return "left-trefoil";
  return "unknot";
}

Sign triangle_delta(const Polygon& hex, int i, const Tolerance& tol, DeltaMode mode) {
  require_hexagon(hex);
  if (i != 2 && i != 4 && i != 6) throw Error(ErrorKind::InvalidArgument, "triangle index must be 2, 4 or 6");
  // 0-based index of the apex v(i).
  const std::size_t apex = static_cast<std::size_t>(i - 1);
  const Vec3& t0 = hex.cyclic(apex + 5);
  const Vec3& t1 = hex[apex];
  const Vec3& t2 = hex.cyclic(apex + 1);

  int total = 0;
  try {
    // Edges v(i+2)v(i+3) and v(i+3)v(i+4) are the only ones that avoid the
    // triangle's vertices.
    for (std::size_t k = 2; k <= 3; ++k) {
      total += segment_triangle_crossing(hex.cyclic(apex + k), hex.cyclic(apex + k + 1), t0, t1, t2, tol).value();
    }
    if (mode == DeltaMode::Exhaustive) {
      // Edges sharing exactly one vertex with the triangle can only meet the
      // open disc if their far endpoint is coplanar with it.
      const Vec3& far_a = hex.cyclic(apex + 2);
      const Vec3& far_b = hex.cyclic(apex + 4);
      if (orient(t0, t1, t2, far_a, tol).is_zero() || orient(t0, t1, t2, far_b, tol).is_zero()) {
        throw Error(ErrorKind::DegenerateConfiguration, "edge incident to the triangle lies in its plane");
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateContact || e.kind() == ErrorKind::DegenerateConfiguration) {
      throw Error(ErrorKind::DegenerateConfiguration,
                  "triangle " + std::to_string(i) + " has a degenerate contact: " + e.what());
    }
    throw;
  }
  if (total < -1 || total > 1) {
    throw Error(ErrorKind::DegenerateConfiguration, "piercing edges did not cancel; polygon is not embedded");
  }
  return Sign(total);
}

std::array<Sign, 3> triangle_deltas(const Polygon& hex, const Tolerance& tol) {
  return {triangle_delta(hex, 2, tol), triangle_delta(hex, 4, tol), triangle_delta(hex, 6, tol)};
}

Sign chirality(const Polygon& hex, const Tolerance& tol) {
  const auto d = triangle_deltas(hex, tol);
  return d[0] * d[1] * d[2];
}

Sign curl(const Polygon& hex, const Tolerance& tol) {
  require_hexagon(hex);
  return orient_vectors(hex[2] - hex[0], hex[4] - hex[0], hex[1] - hex[0], tol);
}

JointClass joint_class(const Polygon& hex, const Tolerance& tol) {
  require_hexagon(hex);
  if (!is_embedded(hex, tol).embedded()) throw Error(ErrorKind::NotEmbedded, "joint class requires an embedded hexagon");
  const Sign delta = chirality(hex, tol);
  const Sign c = curl(hex, tol);
  return {delta, delta * delta * c};
}

RegionCode region_code_hex(const Polygon& hex, const Tolerance& tol) {
  require_hexagon(hex);
  return region_code_of_base(forget_last(hex), tol);
}

}  // namespace polyknot
