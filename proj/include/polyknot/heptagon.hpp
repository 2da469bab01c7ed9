#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polyknot/polygon.hpp"
#include "polyknot/region.hpp"

namespace polyknot {

/// Ingredients and value of the heptagonal invariant
///   xi = 1/2 (theta3 + theta6)(i34 + i45 + i56) + 1/2 (theta3 - theta6)(i34 - i56).
/// Only meaningful as an isotopy invariant on figure-eight heptagons.
struct XiReport {
  Sign theta3;
  Sign theta6;
  int i34 = 0;
  int i45 = 0;
  int i56 = 0;
  int xi = 0;
  /// The exactly-one-nonzero intersection patterns that every figure-eight
  /// heptagon satisfies hold for this heptagon.
  bool figure_eight_consistent = false;

  bool operator==(const XiReport&) const = default;
};

/// (theta3, theta6):
///   theta3 = Sign((v7 - v1) x (v2 - v1) . (v3 - v1))
///   theta6 = Sign((v6 - v1) x (v7 - v1) . (v2 - v1))
std::pair<Sign, Sign> theta_signs(const Polygon& hept, const Tolerance& tol = {});

/// Signed crossings of edges v3v4, v4v5, v5v6 with the open triangle
/// v7 v1 v2 oriented by the heptagon. Throws Error(DegenerateConfiguration).
std::array<int, 3> triangle_intersections(const Polygon& hept, const Tolerance& tol = {});

/// Throws Error(NonGeneric) when theta3 or theta6 vanishes and
/// Error(NotEmbedded) for non-embedded input.
XiReport xi(const Polygon& hept, const Tolerance& tol = {});

/// Region code of the first six vertices about the axis v1 -> v6, a
/// permutation of {2, 3, 4, 5}.
RegionCode region_code_hept(const Polygon& hept, const Tolerance& tol = {});

/// 1-skeleton of the permutahedron on the orderings of (2, 3, 4, 5): nodes
/// joined when they differ by swapping the entries at positions (1,2), (2,3)
/// or (3,4).
struct PermutahedronGraph {
  std::vector<std::array<int, 4>> nodes;
  /// Node index pairs (a < b), each tagged with the swapped position (0, 1, 2).
  struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    int position = 0;
  };
  std::vector<Edge> edges;

  std::size_t index_of(const std::array<int, 4>& word) const;
  std::vector<std::size_t> neighbors(std::size_t node) const;
  bool adjacent(std::size_t a, std::size_t b) const;

  /// Faces traced by alternating two swap positions: commuting swaps (0, 2)
  /// give squares, braid-related swaps (0, 1) and (1, 2) give hexagons.
  /// Each face is returned as its cyclic node sequence.
  std::vector<std::vector<std::size_t>> faces() const;

  /// DOT "graph" text with one "a -- b;" line per edge.
  std::string to_dot() const;
};

std::string word_string(const std::array<int, 4>& word);

PermutahedronGraph permutahedron();

}  // namespace polyknot
