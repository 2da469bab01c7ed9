#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyknot/geom.hpp"

namespace polyknot {

/// Closed polygon <v0, v1, ..., v(n-1)> with a distinguished first vertex and
/// the orientation given by list order. Edge i joins v(i) and v(i+1 mod n).
///
/// Invariants: n >= 3, all coordinates finite, consecutive vertices distinct
/// beyond tolerance (relative to the longest edge).
class Polygon {
 public:
  /// Throws Error(PolygonTooSmall), Error(NonFinite) or
  /// Error(InvalidArgument) for repeated consecutive vertices.
  explicit Polygon(std::vector<Vec3> vertices, const Tolerance& tol = {});

  std::size_t size() const noexcept { return vertices_.size(); }
  const Vec3& operator[](std::size_t i) const { return vertices_[i]; }
  const Vec3& vertex(std::size_t i) const { return vertices_.at(i); }
  std::span<const Vec3> vertices() const noexcept { return vertices_; }

  /// Vertex index taken modulo n.
  const Vec3& cyclic(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  bool operator==(const Polygon&) const = default;

 private:
  std::vector<Vec3> vertices_;
};

/// Non-adjacent edge pairs (i, j), i < j, in the order is_embedded visits them.
std::vector<std::pair<std::size_t, std::size_t>> nonadjacent_edge_pairs(std::size_t n);

/// Minimum distance between non-adjacent edges. Requires n >= 4.
double nonadjacent_min_distance(const Polygon& p);

enum class EmbeddingStatus { Embedded, Singular, Degenerate };

struct EmbeddingReport {
  EmbeddingStatus status = EmbeddingStatus::Embedded;
  /// Offending edge pair (edge indices) for Singular and Degenerate.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// Distance to the discriminant certificate: nonadjacent_min_distance for
  /// n >= 4, the smallest vertex-to-opposite-edge distance for triangles.
  double clearance = 0.0;
  std::size_t pairs_checked = 0;

  bool embedded() const noexcept { return status == EmbeddingStatus::Embedded; }
};

const char* to_string(EmbeddingStatus s) noexcept;

EmbeddingReport is_embedded(const Polygon& p, const Tolerance& tol = {});

std::vector<double> edge_lengths(const Polygon& p);

/// True iff every edge length lies within tol.eps() * target of target.
bool is_equilateral(const Polygon& p, double target, const Tolerance& tol = {});

/// Drops the last vertex. Throws Error(PolygonTooSmall) for n < 4.
Polygon forget_last(const Polygon& p);

/// Embedded, no three vertices collinear and no four vertices coplanar within
/// tolerance. Every sign predicate built on vertex quadruples (curl, theta,
/// triangle piercing, half-plane coincidence, edge/axis contact) is then
/// non-degenerate.
bool is_generic(const Polygon& p, const Tolerance& tol = {});

inline constexpr int kPerturbationAttempts = 64;

/// Displaces every vertex uniformly within a ball of radius `magnitude`,
/// retrying until the result is generic. Deterministic for a given seed.
/// Throws Error(NotEmbedded) if p is not embedded, Error(InvalidArgument)
/// unless 0 <= magnitude < clearance/4, Error(PerturbationFailed) after
/// kPerturbationAttempts failures.
Polygon perturb_generic(const Polygon& p, double magnitude, std::uint64_t seed, const Tolerance& tol = {});

/// Largest single-vertex displacement between two polygons of equal size.
double max_vertex_displacement(const Polygon& a, const Polygon& b);

}  // namespace polyknot
