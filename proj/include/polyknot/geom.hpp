#pragma once

#include <cmath>
#include <ostream>

namespace polyknot {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  bool finite() const noexcept {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Unit vector; the zero vector is returned unchanged.
inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : v;
}

inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Element of {-1, 0, +1}.
class Sign {
 public:
  constexpr Sign() = default;
  /// Throws Error(InvalidArgument) for values outside {-1,0,1}.
  explicit Sign(int value);

  static constexpr Sign of(double v) noexcept { return Sign(v > 0.0 ? 1 : (v < 0.0 ? -1 : 0), 0); }
  static constexpr Sign positive() noexcept { return Sign(1, 0); }
  static constexpr Sign negative() noexcept { return Sign(-1, 0); }
  static constexpr Sign zero() noexcept { return Sign(0, 0); }

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }
  constexpr Sign operator-() const noexcept { return Sign(-value_, 0); }
  constexpr Sign operator*(Sign o) const noexcept { return Sign(value_ * o.value_, 0); }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr Sign(int v, int) noexcept : value_(v) {}
  int value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Sign s);

/// Relative threshold applied to determinants normalized by the product of
/// the norms of their column vectors.
class Tolerance {
 public:
  static constexpr double kDefaultEps = 1e-9;

  constexpr Tolerance() = default;
  /// Throws Error(InvalidArgument) unless 0 < eps < 1.
  explicit Tolerance(double eps);

  constexpr double eps() const noexcept { return eps_; }

 private:
  double eps_ = kDefaultEps;
};

/// Sign of (b-a) x (c-a) . (d-a). Zero when the determinant is within
/// eps * |b-a| |c-a| |d-a|.
Sign orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Tolerance& tol = {});

/// Same test on three edge vectors sharing a base point.
Sign orient_vectors(const Vec3& u, const Vec3& v, const Vec3& w, const Tolerance& tol = {});

enum class SegmentRelation { Disjoint, Crossing, Degenerate };

std::ostream& operator<<(std::ostream& os, SegmentRelation r);

/// Classifies the closed segments p1p2 and q1q2. Crossing requires the four
/// points to be coplanar with each supporting line strictly separating the
/// other segment's endpoints. Touching or collinear overlap is Degenerate.
/// Throws Error(ZeroLengthSegment) if either segment is shorter than eps.
SegmentRelation segments_intersect(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2,
                                   const Tolerance& tol = {});

/// Algebraic intersection number of the open segment e0e1 with the open
/// triangle t0t1t2, oriented by (t1-t0) x (t2-t0). Returns 0 on a clean miss.
/// Throws Error(DegenerateContact) when the segment touches the closed
/// triangle non-transversally or lies in its plane while meeting it, and
/// Error(DegenerateConfiguration) when the triangle itself is degenerate.
Sign segment_triangle_crossing(const Vec3& e0, const Vec3& e1, const Vec3& t0, const Vec3& t1,
                               const Vec3& t2, const Tolerance& tol = {});

/// Euclidean distance between closed segments p1p2 and q1q2.
double segment_distance(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2);

/// Distance from point p to the closed segment ab.
double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

}  // namespace polyknot
