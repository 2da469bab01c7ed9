#include "polyknot/projection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "polyknot/errors.hpp"
#include "polyknot/symmetry.hpp"

namespace polyknot {
namespace {

// A crossing found between two strands, each located by (strand, fraction
// along it).
struct RawCrossing {
  std::size_t strand_a = 0;
  double t_a = 0.0;
  std::size_t strand_b = 0;
  double t_b = 0.0;
  bool a_over = false;
  int sign = 0;
};

Diagram assemble(std::vector<RawCrossing> raw, std::size_t strands, double separation) {
  struct Visit {
    double key;
    std::size_t raw_index;
    bool over;
  };
  std::vector<Visit> visits;
  visits.reserve(2 * raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    visits.push_back({static_cast<double>(r.strand_a) + r.t_a, i, r.a_over});
    visits.push_back({static_cast<double>(r.strand_b) + r.t_b, i, !r.a_over});
  }
  std::sort(visits.begin(), visits.end(), [](const Visit& x, const Visit& y) { return x.key < y.key; });
  for (std::size_t i = 1; i < visits.size(); ++i) {
    if (visits[i].key - visits[i - 1].key <= separation) {
      throw Error(ErrorKind::NonGeneric, "two crossings coincide along a strand (triple point)");
    }
  }
  std::vector<int> id_of(raw.size(), -1);
  std::vector<int> signs;
  std::vector<Pass> seq;
  seq.reserve(visits.size());
  for (const Visit& v : visits) {
    int& id = id_of[v.raw_index];
    if (id < 0) {
      id = static_cast<int>(signs.size());
      signs.push_back(raw[v.raw_index].sign);
    }
    seq.push_back({id, v.over});
  }
  return Diagram::from_passes(std::move(seq), std::move(signs), strands);
}

// Closest point to the origin of the convex hull of `pts`, found by checking
// every simplex of up to three points.
Vec3 closest_hull_point(const std::vector<Vec3>& pts, double slack) {
  const auto valid = [&](const Vec3& c) {
    const double c2 = dot(c, c);
    for (const Vec3& w : pts) {
      if (dot(c, w) < c2 - slack) return false;
    }
    return true;
  };
  Vec3 best;
  double best_norm = -1.0;
  const auto offer = [&](const Vec3& c) {
    const double nc = norm(c);
    if (nc > best_norm && valid(c)) {
      best = c;
      best_norm = nc;
    }
  };
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    offer(pts[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vec3 e = pts[j] - pts[i];
      const double ee = dot(e, e);
      if (ee > 0.0) {
        const double t = -dot(pts[i], e) / ee;
        if (t > 0.0 && t < 1.0) offer(pts[i] + t * e);
      }
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vec3 e1 = pts[j] - pts[i];
        const Vec3 e2 = pts[k] - pts[i];
        const double a = dot(e1, e1);
        const double b = dot(e1, e2);
        const double c = dot(e2, e2);
        const double det = a * c - b * b;
        if (det <= 1e-14 * a * c) continue;
        const double r1 = -dot(pts[i], e1);
        const double r2 = -dot(pts[i], e2);
        const double s = (r1 * c - r2 * b) / det;
        const double t = (a * r2 - b * r1) / det;
        if (s > 0.0 && t > 0.0 && s + t < 1.0) offer(pts[i] + s * e1 + t * e2);
      }
    }
  }
  return best_norm < 0.0 ? Vec3{} : best;
}

// Great-circle arc from a to b (angle < pi) turning about unit normal n.
struct Arc {
  Vec3 a;
  Vec3 b;
  Vec3 n;
  double angle = 0.0;
  // Depth model: real arcs carry their 3D chord (relative to v1); the
  // extensions sit inside the small ball around v1, ext3 nearer than ext1.
  bool real = false;
  Vec3 p;
  Vec3 r;
  double fixed_depth = 0.0;
};

Arc make_arc(const Vec3& a, const Vec3& b) {
  Arc arc;
  arc.a = a;
  arc.b = b;
  arc.n = normalized(cross(a, b));
  arc.angle = std::atan2(norm(cross(a, b)), dot(a, b));
  return arc;
}

double arc_param(const Arc& arc, const Vec3& x) { return std::atan2(dot(cross(arc.a, x), arc.n), dot(arc.a, x)); }

double arc_depth(const Arc& arc, const Vec3& x) {
  if (!arc.real) return arc.fixed_depth;
  const Vec3 d = arc.r - arc.p;
  const Vec3 w = cross(d, x);
  const double s = -dot(cross(arc.p, x), w) / dot(w, w);
  return norm(arc.p + s * d);
}

// Point where the great circle continuing past `to` (coming from `from`)
// first reaches the equator orthogonal to N.
Vec3 equator_exit(const Vec3& from, const Vec3& to, const Vec3& N) {
  const Vec3 m = normalized(cross(from, to));
  const Vec3 q = normalized(cross(m, N));
  const auto turn = [&](const Vec3& c) {
    double psi = std::atan2(dot(cross(to, c), m), dot(to, c));
    if (psi < 0.0) psi += 2.0 * std::numbers::pi;
    return psi;
  };
  return turn(q) <= turn(-q) ? q : -q;
}

void check_projectable(const Polygon& p) {
  if (!is_embedded(p).embedded()) throw Error(ErrorKind::NotEmbedded, "projection needs an embedded polygon");
}

}  // namespace

std::optional<HullRelabeling> supporting_plane(const Polygon& p, std::size_t i, const Tolerance& tol) {
  if (i >= p.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
  std::vector<Vec3> dirs;
  dirs.reserve(p.size() - 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != i) dirs.push_back(normalized(p[j] - p[i]));
  }
  const Vec3 c = closest_hull_point(dirs, 1e-12);
  const double margin = norm(c);
  if (margin <= tol.eps()) return std::nullopt;
  HullRelabeling h;
  h.pivot_index = i;
  h.supporting_plane_normal = c / margin;
  h.margin = std::numeric_limits<double>::infinity();
  for (const Vec3& w : dirs) h.margin = std::min(h.margin, dot(w, h.supporting_plane_normal));
  if (h.margin <= tol.eps()) return std::nullopt;
  return h;
}

std::pair<Polygon, HullRelabeling> hull_relabel(const Polygon& p, const Tolerance& tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (auto h = supporting_plane(p, i, tol)) return {rotate_labels(p, i), *h};
  }
  throw Error(ErrorKind::NonGeneric, "no vertex has a strict supporting plane");
}

Diagram radial_diagram(const Polygon& p, const Tolerance& tol) {
  check_projectable(p);
  const std::size_t n = p.size();
  const auto support = supporting_plane(p, 0, tol);
  if (!support) throw Error(ErrorKind::NonGeneric, "v1 is not strictly extreme; relabel first");
  const Vec3 N = support->supporting_plane_normal;
  const double eps = tol.eps();

  std::vector<Vec3> rel(n);
  std::vector<Vec3> dir(n);
  for (std::size_t k = 1; k < n; ++k) {
    rel[k] = p[k] - p[0];
    dir[k] = normalized(rel[k]);
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (norm(cross(dir[k], dir[k + 1])) <= eps) {
      throw Error(ErrorKind::NonGeneric, "an edge projects to a point (radial edge)");
    }
  }
  if (n == 3) return Diagram::from_passes({}, {}, 3);

  // Strands in knot order: ext1 (q2 -> p2), real arcs p2 -> p3 ... p(n-1) -> pn,
  // ext3 (pn -> q3). The equatorial arc q3 -> q2 closes the loop.
  std::vector<Arc> arcs;
  const Vec3 q2 = equator_exit(dir[2], dir[1], N);
  const Vec3 q3 = equator_exit(dir[n - 2], dir[n - 1], N);
  Arc ext1 = make_arc(q2, dir[1]);
  ext1.fixed_depth = -1.0;
  arcs.push_back(ext1);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    Arc a = make_arc(dir[k], dir[k + 1]);
    a.real = true;
    a.p = rel[k];
    a.r = rel[k + 1];
    arcs.push_back(a);
  }
  Arc ext3 = make_arc(dir[n - 1], q3);
  ext3.fixed_depth = -2.0;
  arcs.push_back(ext3);
  for (const Arc& a : arcs) {
    if (a.angle <= eps) throw Error(ErrorKind::NonGeneric, "degenerate extension arc");
  }

  const double delta = eps;
  std::vector<RawCrossing> raw;
  const std::size_t m = arcs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      const Arc& A = arcs[i];
      const Arc& B = arcs[j];
      const Vec3 line = cross(A.n, B.n);
      if (norm(line) <= eps) {
        // Same great circle: any overlap is a non-transverse contact.
        for (const Vec3& x : {B.a, B.b}) {
          const double s = arc_param(A, x);
          if (s >= -delta && s <= A.angle + delta) throw Error(ErrorKind::NonGeneric, "arcs overlap");
        }
        for (const Vec3& x : {A.a, A.b}) {
          const double s = arc_param(B, x);
          if (s >= -delta && s <= B.angle + delta) throw Error(ErrorKind::NonGeneric, "arcs overlap");
        }
        continue;
      }
      const Vec3 u = normalized(line);
      for (const Vec3& x : {u, -u}) {
        const double sa = arc_param(A, x);
        const double sb = arc_param(B, x);
        const bool in_a = sa >= -delta && sa <= A.angle + delta;
        const bool in_b = sb >= -delta && sb <= B.angle + delta;
        if (!in_a || !in_b) continue;
        const bool interior_a = sa > delta && sa < A.angle - delta;
        const bool interior_b = sb > delta && sb < B.angle - delta;
        if (!interior_a || !interior_b) throw Error(ErrorKind::NonGeneric, "arcs meet at an endpoint");
        const double da = arc_depth(A, x);
        const double db = arc_depth(B, x);
        if (std::abs(da - db) <= eps * std::max({std::abs(da), std::abs(db), 1.0})) {
          throw Error(ErrorKind::NonGeneric, "strands at equal depth");
        }
        const bool a_over = da < db;
        const Vec3 ta = cross(A.n, x);
        const Vec3 tb = cross(B.n, x);
        const Vec3& to = a_over ? ta : tb;
        const Vec3& tu = a_over ? tb : ta;
        const Sign s = orient_vectors(to, tu, -x, tol);
        if (s.is_zero()) throw Error(ErrorKind::NonGeneric, "tangential crossing");
        raw.push_back({i, sa / A.angle, j, sb / B.angle, a_over, s.value()});
      }
    }
  }
  return assemble(std::move(raw), m, delta);
}

Diagram orthogonal_diagram(const Polygon& p, const Tolerance& tol) {
  check_projectable(p);
  const std::size_t n = p.size();
  const double eps = tol.eps();
  const Vec3 d = normalized(p[1] - p[0]);
  const Vec3 helper = std::abs(d.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(helper, d));
  const Vec3 e2 = cross(d, e1);

  struct Seg {
    double ax, ay, bx, by;
    double ha, hb;
    Vec3 dir3;
  };
  // Strands are the edges v2v3, ..., vnv1; edge v1v2 collapses to a point.
  std::vector<Seg> segs;
  for (std::size_t k = 1; k < n; ++k) {
    const Vec3 a = p[k] - p[0];
    const Vec3 b = p.cyclic(k + 1) - p[0];
    Seg s{dot(a, e1), dot(a, e2), dot(b, e1), dot(b, e2), dot(a, d), dot(b, d), b - a};
    const double len2 = std::hypot(s.bx - s.ax, s.by - s.ay);
    if (len2 <= eps * norm(s.dir3)) throw Error(ErrorKind::NonGeneric, "an edge is parallel to the view direction");
    segs.push_back(s);
  }
  const std::size_t m = segs.size();
  const double delta = eps;
  std::vector<RawCrossing> raw;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      const Seg& A = segs[i];
      const Seg& B = segs[j];
      const double rx = A.bx - A.ax, ry = A.by - A.ay;
      const double sx = B.bx - B.ax, sy = B.by - B.ay;
      const double denom = rx * sy - ry * sx;
      const double lr = std::hypot(rx, ry), ls = std::hypot(sx, sy);
      const double qx = B.ax - A.ax, qy = B.ay - A.ay;
      if (std::abs(denom) <= eps * lr * ls) {
        // Parallel images: collinear overlap is a degenerate projection.
        const double off = std::abs(qx * ry - qy * rx) / lr;
        if (off > eps * std::max(lr, ls)) continue;
        const double t0 = (qx * rx + qy * ry) / (lr * lr);
        const double t1 = ((B.bx - A.ax) * rx + (B.by - A.ay) * ry) / (lr * lr);
        const double lo = std::min(t0, t1), hi = std::max(t0, t1);
        const double overlap = std::min(hi, 1.0) - std::max(lo, 0.0);
        if (overlap > (adjacent ? delta : -delta)) throw Error(ErrorKind::NonGeneric, "projected edges overlap");
        continue;
      }
      if (adjacent) continue;
      const double t = (qx * sy - qy * sx) / denom;
      const double u = (qx * ry - qy * rx) / denom;
      if (t < -delta || t > 1.0 + delta || u < -delta || u > 1.0 + delta) continue;
      if (t <= delta || t >= 1.0 - delta || u <= delta || u >= 1.0 - delta) {
        throw Error(ErrorKind::NonGeneric, "projected edges meet at a vertex image");
      }
      const double ha = A.ha + t * (A.hb - A.ha);
      const double hb = B.ha + u * (B.hb - B.ha);
      if (std::abs(ha - hb) <= eps * std::max({std::abs(ha), std::abs(hb), 1.0})) {
        throw Error(ErrorKind::NonGeneric, "strands at equal height");
      }
      const bool a_over = ha > hb;
      const Vec3& o = a_over ? A.dir3 : B.dir3;
      const Vec3& un = a_over ? B.dir3 : A.dir3;
      const Sign s = orient_vectors(o, un, d, tol);
      if (s.is_zero()) throw Error(ErrorKind::NonGeneric, "tangential crossing");
      raw.push_back({i, t, j, u, a_over, s.value()});
    }
  }
  return assemble(std::move(raw), m, delta);
}

Diagram project_radial(const Polygon& p, const Tolerance& tol) {
  return radial_diagram(hull_relabel(p, tol).first, tol);
}

int crossing_bound(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "polygons have at least three edges");
  return (n - 3) * (n - 4) / 2;
}

int orthogonal_crossing_bound(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "polygons have at least three edges");
  return std::max(0, (n - 1) * (n - 4) / 2);
}

}  // namespace polyknot
