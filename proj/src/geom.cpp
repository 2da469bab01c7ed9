#include "polyknot/geom.hpp"

#include <algorithm>
#include <array>

#include "polyknot/errors.hpp"

namespace polyknot {

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

Sign::Sign(int value) : value_(value) {
  if (value < -1 || value > 1) {
    throw Error(ErrorKind::InvalidArgument, "sign value must be -1, 0 or +1");
  }
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.value(); }

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerance eps must lie in (0, 1)");
  }
}

std::ostream& operator<<(std::ostream& os, SegmentRelation r) {
  switch (r) {
    case SegmentRelation::Disjoint: return os << "Disjoint";
    case SegmentRelation::Crossing: return os << "Crossing";
    case SegmentRelation::Degenerate: return os << "Degenerate";
  }
  return os;
}

Sign orient_vectors(const Vec3& u, const Vec3& v, const Vec3& w, const Tolerance& tol) {
  const double det = triple(u, v, w);
  const double scale = norm(u) * norm(v) * norm(w);
  if (std::abs(det) <= tol.eps() * scale) return Sign::zero();
  return Sign::of(det);
}

Sign orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Tolerance& tol) {
  return orient_vectors(b - a, c - a, d - a, tol);
}

namespace {

// Orientation of c relative to the directed line ab, measured in the plane
// with normal n.
Sign side_in_plane(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& n, const Tolerance& tol) {
  return orient_vectors(b - a, c - a, n, tol);
}

// Parameter of the projection of p onto the line ab (0 at a, 1 at b).
double line_parameter(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  return dot(p - a, d) / dot(d, d);
}

bool within_closed(double t, double slack) { return t >= -slack && t <= 1.0 + slack; }

// Closed-triangle membership for a point already known to lie in the plane.
bool in_closed_triangle(const Vec3& p, const Vec3& t0, const Vec3& t1, const Vec3& t2, const Vec3& n,
                        const Tolerance& tol) {
  const std::array<Sign, 3> s{side_in_plane(t0, t1, p, n, tol), side_in_plane(t1, t2, p, n, tol),
                              side_in_plane(t2, t0, p, n, tol)};
  return std::none_of(s.begin(), s.end(), [](Sign x) { return x.value() < 0; });
}

SegmentRelation collinear_overlap(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2,
                                  const Tolerance& tol) {
  const bool p_longer = distance(p1, p2) >= distance(q1, q2);
  const Vec3& a = p_longer ? p1 : q1;
  const Vec3& b = p_longer ? p2 : q2;
  const Vec3& c = p_longer ? q1 : p1;
  const Vec3& d = p_longer ? q2 : p2;
  double lo = line_parameter(c, a, b);
  double hi = line_parameter(d, a, b);
  if (lo > hi) std::swap(lo, hi);
  const double slack = tol.eps();
  if (hi < -slack || lo > 1.0 + slack) return SegmentRelation::Disjoint;
  return SegmentRelation::Degenerate;
}

}  // namespace

SegmentRelation segments_intersect(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2,
                                   const Tolerance& tol) {
  const double lp = distance(p1, p2);
  const double lq = distance(q1, q2);
  const double ref = std::max(lp, lq);
  if (lp <= tol.eps() * ref || lq <= tol.eps() * ref || ref == 0.0) {
    throw Error(ErrorKind::ZeroLengthSegment, "segment of zero length");
  }

  if (!orient(p1, p2, q1, q2, tol).is_zero()) return SegmentRelation::Disjoint;

  // Coplanar within tolerance: pick the best-conditioned plane normal.
  const std::array<Vec3, 4> candidates{cross(p2 - p1, q1 - p1), cross(p2 - p1, q2 - p1),
                                       cross(q2 - q1, p1 - q1), cross(q2 - q1, p2 - q1)};
  const std::array<double, 4> scales{lp * distance(q1, p1), lp * distance(q2, p1), lq * distance(p1, q1),
                                     lq * distance(p2, q1)};
  std::size_t best = 0;
  double best_ratio = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double ratio = scales[i] > 0.0 ? norm(candidates[i]) / scales[i] : 0.0;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  if (best_ratio <= tol.eps()) return collinear_overlap(p1, p2, q1, q2, tol);
  const Vec3 n = candidates[best];

  const Sign d1 = side_in_plane(p1, p2, q1, n, tol);
  const Sign d2 = side_in_plane(p1, p2, q2, n, tol);
  const Sign d3 = side_in_plane(q1, q2, p1, n, tol);
  const Sign d4 = side_in_plane(q1, q2, p2, n, tol);

  if ((d1 * d2).value() < 0 && (d3 * d4).value() < 0) return SegmentRelation::Crossing;
  if ((!d1.is_zero() && d1 == d2) || (!d3.is_zero() && d3 == d4)) return SegmentRelation::Disjoint;

  const double slack = tol.eps();
  const auto touches = [&](Sign s, const Vec3& pt, const Vec3& a, const Vec3& b) {
    return s.is_zero() && within_closed(line_parameter(pt, a, b), slack);
  };
  if (touches(d1, q1, p1, p2) || touches(d2, q2, p1, p2) || touches(d3, p1, q1, q2) ||
      touches(d4, p2, q1, q2)) {
    return SegmentRelation::Degenerate;
  }
  return SegmentRelation::Disjoint;
}

Sign segment_triangle_crossing(const Vec3& e0, const Vec3& e1, const Vec3& t0, const Vec3& t1,
                               const Vec3& t2, const Tolerance& tol) {
  const Vec3 n = cross(t1 - t0, t2 - t0);
  if (norm(n) <= tol.eps() * distance(t1, t0) * distance(t2, t0)) {
    throw Error(ErrorKind::DegenerateConfiguration, "degenerate triangle");
  }

  const Sign s0 = orient(t0, t1, t2, e0, tol);
  const Sign s1 = orient(t0, t1, t2, e1, tol);

  if (!s0.is_zero() && s0 == s1) return Sign::zero();

  if (!s0.is_zero() && !s1.is_zero()) {
    const Sign a = orient(e0, e1, t0, t1, tol);
    const Sign b = orient(e0, e1, t1, t2, tol);
    const Sign c = orient(e0, e1, t2, t0, tol);
    const bool has_pos = a.value() > 0 || b.value() > 0 || c.value() > 0;
    const bool has_neg = a.value() < 0 || b.value() < 0 || c.value() < 0;
    if (has_pos && has_neg) return Sign::zero();
    if (a.is_zero() || b.is_zero() || c.is_zero()) {
      throw Error(ErrorKind::DegenerateContact, "segment meets triangle boundary");
    }
    return s1;
  }

  if (s0.is_zero() != s1.is_zero()) {
    const Vec3& on_plane = s0.is_zero() ? e0 : e1;
    if (in_closed_triangle(on_plane, t0, t1, t2, n, tol)) {
      throw Error(ErrorKind::DegenerateContact, "segment endpoint lies on triangle");
    }
    return Sign::zero();
  }

  // Segment lies in the triangle's plane.
  if (in_closed_triangle(e0, t0, t1, t2, n, tol) || in_closed_triangle(e1, t0, t1, t2, n, tol)) {
    throw Error(ErrorKind::DegenerateContact, "segment lies in triangle plane and meets it");
  }
  const std::array<std::array<Vec3, 2>, 3> sides{{{t0, t1}, {t1, t2}, {t2, t0}}};
  for (const auto& side : sides) {
    if (segments_intersect(e0, e1, side[0], side[1], tol) != SegmentRelation::Disjoint) {
      throw Error(ErrorKind::DegenerateContact, "segment lies in triangle plane and meets it");
    }
  }
  return Sign::zero();
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 d = b - a;
  const double dd = dot(d, d);
  if (dd == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, d) / dd, 0.0, 1.0);
  return distance(p, a + d * t);
}

double segment_distance(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2) {
  // Closest points of two segments (Ericson, Real-Time Collision Detection 5.1.9).
  const Vec3 d1 = p2 - p1;
  const Vec3 d2 = q2 - q1;
  const Vec3 r = p1 - q1;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  double s = 0.0;
  double t = 0.0;
  if (a == 0.0 && e == 0.0) return distance(p1, q1);
  if (a == 0.0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e == 0.0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return distance(p1 + d1 * s, q1 + d2 * t);
}

}  // namespace polyknot
