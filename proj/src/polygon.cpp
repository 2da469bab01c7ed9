#include "polyknot/polygon.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "polyknot/errors.hpp"

namespace polyknot {

Polygon::Polygon(std::vector<Vec3> vertices, const Tolerance& tol) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorKind::PolygonTooSmall, "a polygon needs at least 3 vertices");
  for (const Vec3& v : vertices_) {
    if (!v.finite()) throw Error(ErrorKind::NonFinite, "polygon vertex has a non-finite coordinate");
  }
  double longest = 0.0;
  for (std::size_t i = 0; i < n; ++i) longest = std::max(longest, distance(vertices_[i], vertices_[(i + 1) % n]));
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(vertices_[i], vertices_[(i + 1) % n]) <= tol.eps() * longest || longest == 0.0) {
      throw Error(ErrorKind::InvalidArgument, "consecutive polygon vertices coincide");
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> nonadjacent_edge_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n < 4) return pairs;
  pairs.reserve(n * (n - 3) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

double nonadjacent_min_distance(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 4) throw Error(ErrorKind::PolygonTooSmall, "non-adjacent edges need n >= 4");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : nonadjacent_edge_pairs(n)) {
    best = std::min(best, segment_distance(p[i], p.cyclic(i + 1), p[j], p.cyclic(j + 1)));
  }
  return best;
}

const char* to_string(EmbeddingStatus s) noexcept {
  switch (s) {
    case EmbeddingStatus::Embedded: return "Embedded";
    case EmbeddingStatus::Singular: return "Singular";
    case EmbeddingStatus::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

EmbeddingReport is_embedded(const Polygon& p, const Tolerance& tol) {
  const std::size_t n = p.size();
  EmbeddingReport report;
  if (n == 3) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i) best = std::min(best, point_segment_distance(p[i], p.cyclic(i + 1), p.cyclic(i + 2)));
    report.clearance = best;
    return report;
  }

  std::optional<std::pair<std::size_t, std::size_t>> crossing;
  std::optional<std::pair<std::size_t, std::size_t>> degenerate;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : nonadjacent_edge_pairs(n)) {
    ++report.pairs_checked;
    const Vec3& a = p[i];
    const Vec3& b = p.cyclic(i + 1);
    const Vec3& c = p[j];
    const Vec3& d = p.cyclic(j + 1);
    best = std::min(best, segment_distance(a, b, c, d));
    switch (segments_intersect(a, b, c, d, tol)) {
      case SegmentRelation::Crossing:
        if (!crossing) crossing.emplace(i, j);
        break;
      case SegmentRelation::Degenerate:
        if (!degenerate) degenerate.emplace(i, j);
        break;
      case SegmentRelation::Disjoint:
        break;
    }
  }
  report.clearance = best;
  if (crossing) {
    report.status = EmbeddingStatus::Singular;
    report.witness = crossing;
  } else if (degenerate) {
    report.status = EmbeddingStatus::Degenerate;
    report.witness = degenerate;
  } else if (!(best > 0.0)) {
    // Touching that the sign predicates could not resolve.
    report.status = EmbeddingStatus::Degenerate;
  }
  return report;
}

std::vector<double> edge_lengths(const Polygon& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = distance(p[i], p.cyclic(i + 1));
  return out;
}

bool is_equilateral(const Polygon& p, double target, const Tolerance& tol) {
  if (!(target > 0.0)) throw Error(ErrorKind::InvalidArgument, "target edge length must be positive");
  const auto lengths = edge_lengths(p);
  return std::all_of(lengths.begin(), lengths.end(),
                     [&](double l) { return std::abs(l - target) <= tol.eps() * target; });
}

Polygon forget_last(const Polygon& p) {
  if (p.size() < 4) throw Error(ErrorKind::PolygonTooSmall, "forget_last needs n >= 4");
  std::vector<Vec3> v(p.vertices().begin(), p.vertices().end() - 1);
  return Polygon(std::move(v));
}

bool is_generic(const Polygon& p, const Tolerance& tol) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const Vec3 u = p[b] - p[a];
        const Vec3 v = p[c] - p[a];
        if (norm(cross(u, v)) <= tol.eps() * norm(u) * norm(v)) return false;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (orient(p[a], p[b], p[c], p[d], tol).is_zero()) return false;
        }
      }
    }
  }
  const auto report = is_embedded(p, tol);
  return report.embedded() && report.clearance > 0.0;
}

double max_vertex_displacement(const Polygon& a, const Polygon& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "polygons differ in vertex count");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, distance(a[i], b[i]));
  return best;
}

namespace {

Vec3 uniform_in_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Vec3 v{u(rng), u(rng), u(rng)};
    if (dot(v, v) <= 1.0) return v * radius;
  }
}

}  // namespace

Polygon perturb_generic(const Polygon& p, double magnitude, std::uint64_t seed, const Tolerance& tol) {
  const auto report = is_embedded(p, tol);
  if (!report.embedded()) throw Error(ErrorKind::NotEmbedded, "perturb_generic requires an embedded polygon");
  if (!(magnitude >= 0.0) || !(magnitude < report.clearance / 4.0)) {
    throw Error(ErrorKind::InvalidArgument, "perturbation magnitude must lie in [0, clearance/4)");
  }
  if (magnitude == 0.0) return p;

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kPerturbationAttempts; ++attempt) {
    std::vector<Vec3> moved(p.vertices().begin(), p.vertices().end());
    for (Vec3& v : moved) v += uniform_in_ball(rng, magnitude);
    try {
      Polygon candidate(std::move(moved), tol);
      if (is_generic(candidate, tol)) return candidate;
    } catch (const Error&) {
      // Coincident vertices after the move; draw again.
    }
  }
  throw Error(ErrorKind::PerturbationFailed, "no generic perturbation found");
}

}  // namespace polyknot
