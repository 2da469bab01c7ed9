#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "polyknot/diagram.hpp"
#include "polyknot/geom.hpp"
#include "polyknot/laurent.hpp"
#include "polyknot/polygon.hpp"

namespace testing {

using polyknot::Polygon;
using polyknot::Vec3;

inline const std::vector<Vec3> kPentagonQ = {
    {0.0, 0.0, 0.0},
    {0.886375, 0.276357, 0.371441},
    {0.125043, -0.363873, 0.473812},
    {0.549367, 0.461959, 0.845227},
    {0.818041, 0.0, 0.0},
};
inline const Vec3 kUnknotV6{0.4090205, 0.0, -0.912525};
inline const Vec3 kTrefoilV6{0.4090205, -0.343939, 0.845227};
// Point where Q meets the half-plane y = .6z, z > 0, as printed (six digits).
inline const Vec3 kHalfPlaneHit{0.828333, 0.227547, 0.379246};

// The same point solved exactly on edge v2v3; the printed rounding misses
// the edge by about 2e-8.
inline Vec3 half_plane_hit() {
  const Vec3 a = kPentagonQ[1];
  const Vec3 d = kPentagonQ[2] - kPentagonQ[1];
  const double t = (0.6 * a.z - a.y) / (d.y - 0.6 * d.z);
  return a + d * t;
}

inline Polygon pentagon_q() { return Polygon(kPentagonQ); }

inline Polygon q_plus(const Vec3& v6) {
  auto v = kPentagonQ;
  v.push_back(v6);
  return Polygon(v);
}

inline Polygon hexagon_unknot() { return q_plus(kUnknotV6); }
inline Polygon hexagon_trefoil() { return q_plus(kTrefoilV6); }
// Q plus a sixth vertex on the ray from v1 through the hit point, beyond it.
inline Polygon hexagon_crossed() { return q_plus(half_plane_hit() * 2.0); }

inline Polygon regular_planar(std::size_t n, double radius = 1.0) {
  std::vector<Vec3> v;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    v.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
  }
  return Polygon(v);
}

// Rigid motion: rotation about a fixed skew axis followed by a translation.
inline Vec3 rigid(const Vec3& p) {
  const Vec3 k = polyknot::normalized(Vec3{1.0, -2.0, 0.5});
  const double a = 0.7;
  const Vec3 r = p * std::cos(a) + polyknot::cross(k, p) * std::sin(a) + k * (polyknot::dot(k, p) * (1 - std::cos(a)));
  return r + Vec3{3.0, -1.5, 2.25};
}

inline Polygon rigid(const Polygon& p) {
  std::vector<Vec3> v;
  for (const Vec3& x : p.vertices()) v.push_back(rigid(x));
  return Polygon(v);
}

// ---- geometric oracles -------------------------------------------------

// Orientation determinant by cofactor expansion in long double.
inline long double det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  const long double a = u.x, b = u.y, c = u.z, d = v.x, e = v.y, f = v.z, g = w.x, h = w.y, i = w.z;
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Moller-Trumbore: +-1 when the open segment e0e1 meets the triangle,
// signed by the direction of travel against the triangle normal; 0 on miss.
inline int moller_trumbore(const Vec3& e0, const Vec3& e1, const Vec3& t0, const Vec3& t1, const Vec3& t2) {
  const Vec3 dir = e1 - e0;
  const Vec3 a = t1 - t0;
  const Vec3 b = t2 - t0;
  const Vec3 pvec = polyknot::cross(dir, b);
  const double det = polyknot::dot(a, pvec);
  if (std::abs(det) < 1e-14) return 0;
  const Vec3 tvec = e0 - t0;
  const double u = polyknot::dot(tvec, pvec) / det;
  if (u <= 0.0 || u >= 1.0) return 0;
  const Vec3 qvec = polyknot::cross(tvec, a);
  const double v = polyknot::dot(dir, qvec) / det;
  if (v <= 0.0 || u + v >= 1.0) return 0;
  const double t = polyknot::dot(b, qvec) / det;
  if (t <= 0.0 || t >= 1.0) return 0;
  return polyknot::dot(polyknot::cross(a, b), dir) > 0.0 ? 1 : -1;
}

// Whether the origin lies in the convex hull of pts, by Caratheodory:
// search every simplex of up to four points for nonnegative barycentric
// coordinates of the origin.
inline bool origin_in_hull(const std::vector<Vec3>& pts) {
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // origin on segment
      const Vec3 c = polyknot::cross(pts[i], pts[j]);
      if (polyknot::norm(c) < 1e-12 && polyknot::dot(pts[i], pts[j]) < 0) return true;
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          const Vec3 &a = pts[i], &b = pts[j], &cc = pts[k], &d = pts[l];
          const long double vol = det3(b - a, cc - a, d - a);
          if (std::abs(static_cast<double>(vol)) < 1e-14) continue;
          const Vec3 o = -a;
          const long double s1 = det3(o, cc - a, d - a) / vol;
          const long double s2 = det3(b - a, o, d - a) / vol;
          const long double s3 = det3(b - a, cc - a, o) / vol;
          if (s1 >= 0 && s2 >= 0 && s3 >= 0 && s1 + s2 + s3 <= 1) return true;
        }
      }
    }
  }
  return false;
}

// ---- knot oracles ------------------------------------------------------

using Poly = std::map<int, long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b) r[e1 + e2] += c1 * c2;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline Poly add(Poly a, const Poly& b) {
  for (auto [e, c] : b) a[e] += c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// Skein-recursive Kauffman bracket: smooth the first crossing both ways and
// recurse; at the leaves count loops by walking the label graph.
inline Poly skein_bracket(const std::vector<std::array<int, 4>>& pd) {
  std::function<Poly(std::size_t, std::vector<std::pair<int, int>>&)> go =
      [&](std::size_t k, std::vector<std::pair<int, int>>& joins) -> Poly {
    if (k == pd.size()) {
      std::map<int, std::vector<int>> adj;
      for (auto [a, b] : joins) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      std::map<int, bool> seen;
      int loops = 0;
      for (const auto& [start, _] : adj) {
        if (seen[start]) continue;
        ++loops;
        std::vector<int> stack{start};
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          if (seen[x]) continue;
          seen[x] = true;
          for (int y : adj[x]) stack.push_back(y);
        }
      }
      Poly r{{0, 1}};
      for (int i = 1; i < loops; ++i) r = mul(r, Poly{{2, -1}, {-2, -1}});
      return r;
    }
    const auto [a, b, c, d] = pd[k];
    joins.push_back({a, b});
    joins.push_back({c, d});
    Poly pa = mul(Poly{{1, 1}}, go(k + 1, joins));
    joins.pop_back();
    joins.pop_back();
    joins.push_back({a, d});
    joins.push_back({b, c});
    Poly pb = mul(Poly{{-1, 1}}, go(k + 1, joins));
    joins.pop_back();
    joins.pop_back();
    return add(pa, pb);
  };
  if (pd.empty()) return {{0, 1}};
  std::vector<std::pair<int, int>> joins;
  return go(0, joins);
}

inline Poly to_poly(const polyknot::LaurentPolynomial& p) {
  Poly r;
  for (auto [e, c] : p.terms()) r[e] = c;
  return r;
}

// Standard braid words for the tabulated knots (positive letters are
// positive crossings).
struct BraidFixture {
  const char* name;
  int strands;
  std::vector<int> word;
};

inline const std::vector<BraidFixture> kBraids = {
    {"3_1", 2, {1, 1, 1}},
    {"4_1", 3, {1, -2, 1, -2}},
    {"5_1", 2, {1, 1, 1, 1, 1}},
    {"5_2", 3, {1, 1, 1, 2, -1, 2}},
    {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
    {"6_2", 3, {1, 1, 1, -2, 1, -2}},
    {"6_3", 3, {1, 1, -2, 1, -2, -2}},
    {"8_19", 3, {1, 2, 1, 2, 1, 2, 1, 2}},
    {"8_20", 3, {1, 1, 1, -2, -1, -1, -1, -2}},
    {"3_1#3_1", 3, {1, 1, 1, 2, 2, 2}},
    {"3_1#-3_1", 3, {1, 1, 1, -2, -2, -2}},
};

inline std::string fixture_path(const std::string& name) { return std::string(POLYKNOT_FIXTURE_DIR) + "/" + name; }

}  // namespace testing
