#include "polyknot/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polyknot/errors.hpp"

namespace polyknot {

std::string RegionCode::str() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(word[i]);
  }
  return out;
}

RegionCode parse_region_code(const std::string& text) {
  RegionCode code;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '-')) {
    if (item.size() != 1 || !std::isdigit(static_cast<unsigned char>(item[0]))) {
      throw Error(ErrorKind::ParseError, "malformed region code '" + text + "'");
    }
    code.word.push_back(item[0] - '0');
  }
  std::vector<int> sorted = code.word;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 2) {
      throw Error(ErrorKind::ParseError, "region code '" + text + "' is not a permutation of 2..k");
    }
  }
  if (sorted.empty()) throw Error(ErrorKind::ParseError, "empty region code");
  return code;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

struct AxisFrame {
  Vec3 origin;
  Vec3 axis;
  Vec3 e1;
  Vec3 e2;

  // Coordinates in the plane perpendicular to the axis.
  std::pair<double, double> project(const Vec3& p) const {
    const Vec3 d = p - origin;
    return {dot(d, e1), dot(d, e2)};
  }
};

AxisFrame make_frame(const Vec3& from, const Vec3& to) {
  const Vec3 axis = normalized(to - from);
  // Any unit vector orthogonal to the axis; the region code is independent of
  // this choice because only relative angles are used.
  const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(helper, axis));
  const Vec3 e2 = cross(axis, e1);  // (e1, e2, axis) is right-handed.
  return {from, axis, e1, e2};
}

}  // namespace

std::vector<HalfPlaneAngle> half_plane_angles(const Polygon& base, const Tolerance& tol) {
  const std::size_t m = base.size();
  if (m < 4) throw Error(ErrorKind::PolygonTooSmall, "region codes need a base polygon with at least 4 vertices");
  const AxisFrame frame = make_frame(base[0], base[m - 1]);
  std::vector<HalfPlaneAngle> out;
  for (std::size_t k = 1; k + 1 < m; ++k) {
    const auto [x, y] = frame.project(base[k]);
    const double r = std::hypot(x, y);
    if (r <= tol.eps() * distance(base[k], base[0])) {
      throw Error(ErrorKind::NonGeneric, "vertex " + std::to_string(k + 1) + " lies on the axis");
    }
    out.push_back({static_cast<int>(k) + 1, wrap_positive(std::atan2(y, x))});
  }
  return out;
}

RegionCode region_code_of_base(const Polygon& base, const Tolerance& tol) {
  const std::size_t m = base.size();
  const auto angles = half_plane_angles(base, tol);
  const AxisFrame frame = make_frame(base[0], base[m - 1]);

  std::vector<std::pair<double, double>> planar;
  for (std::size_t k = 1; k + 1 < m; ++k) planar.push_back(frame.project(base[k]));

  // Pairwise distinct half-planes.
  for (std::size_t i = 0; i < planar.size(); ++i) {
    for (std::size_t j = i + 1; j < planar.size(); ++j) {
      const auto [xi, yi] = planar[i];
      const auto [xj, yj] = planar[j];
      const double s = xi * yj - yi * xj;
      const double c = xi * xj + yi * yj;
      if (std::abs(s) <= tol.eps() * std::hypot(xi, yi) * std::hypot(xj, yj)) {
        if (c > 0.0) throw Error(ErrorKind::NonGeneric, "two half-planes coincide");
        if (j == i + 1) throw Error(ErrorKind::NonGeneric, "an edge meets the axis");
      }
    }
  }

  // Each edge between consecutive half-plane vertices sweeps the minor arc
  // between its endpoint angles.
  struct Sweep {
    double start;
    double signed_extent;
  };
  std::vector<Sweep> sweeps;
  for (std::size_t i = 0; i + 1 < planar.size(); ++i) {
    const auto [x0, y0] = planar[i];
    const auto [x1, y1] = planar[i + 1];
    const double extent = std::atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1);
    sweeps.push_back({angles[i].angle, extent});
  }
  const auto covered = [&](double theta) {
    return std::any_of(sweeps.begin(), sweeps.end(), [&](const Sweep& s) {
      if (s.signed_extent >= 0.0) return wrap_positive(theta - s.start) < s.signed_extent;
      return wrap_positive(s.start - theta) < -s.signed_extent;
    });
  };

  std::vector<HalfPlaneAngle> sorted = angles;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.angle < b.angle; });

  const std::size_t k = sorted.size();
  std::vector<std::size_t> empty;
  for (std::size_t i = 0; i < k; ++i) {
    const double lo = sorted[i].angle;
    const double gap = wrap_positive(sorted[(i + 1) % k].angle - lo);
    if (!covered(lo + gap / 2.0)) empty.push_back(i);
  }
  if (empty.size() != 1) {
    throw Error(ErrorKind::NonGeneric, empty.empty() ? "base polygon winds around the axis; no empty sector"
                                                     : "more than one empty sector");
  }

  RegionCode code;
  for (std::size_t step = 1; step <= k; ++step) code.word.push_back(sorted[(empty.front() + step) % k].label);
  return code;
}

}  // namespace polyknot
