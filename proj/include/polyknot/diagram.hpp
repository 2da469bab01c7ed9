#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace polyknot {

/// One visit of the knot to a crossing while traversing it.
struct Pass {
  int crossing = 0;
  bool over = false;

  bool operator==(const Pass&) const = default;
};

/// Oriented single-component knot diagram: the cyclic sequence of crossing
/// visits plus a sign per crossing (+1 when (over x under) points at the
/// viewer).
///
/// PD codes follow the usual convention: X[a,b,c,d] lists the four edge
/// labels counterclockwise starting from the incoming under-strand; edge
/// label p (1-based) arrives at visit p and label 2c arrives at visit 0.
class Diagram {
 public:
  struct Crossing {
    std::size_t over_position = 0;
    std::size_t under_position = 0;
    int sign = 0;
  };

  Diagram() = default;

  /// Throws Error(InvalidArgument) unless every crossing 0..c-1 is visited
  /// exactly twice, once over and once under, and every sign is +-1.
  static Diagram from_passes(std::vector<Pass> sequence, std::vector<int> signs, std::size_t arc_count = 0);

  /// Gauss code with 1-based crossing ids, positive entries for over-passes.
  static Diagram from_gauss(const std::vector<int>& gauss, const std::vector<int>& signs);

  static Diagram from_pd(const std::vector<std::array<int, 4>>& pd);

  /// Closure of a braid on `strands` strands; letter +i is sigma_i (a
  /// positive crossing), -i its inverse. The closure must be a knot.
  static Diagram from_braid(int strands, const std::vector<int>& word);

  std::size_t crossing_count() const noexcept { return signs_.size(); }
  /// Number of projected arcs the diagram was built from (0 if abstract).
  std::size_t arc_count() const noexcept { return arc_count_; }
  const std::vector<Pass>& passes() const noexcept { return passes_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  std::vector<Crossing> crossings() const;
  int writhe() const;

  std::vector<int> gauss_code() const;
  std::vector<std::array<int, 4>> pd_code() const;

  /// "1 -2 3 -1 2 -3".
  std::string gauss_string() const;
  /// "+ + +".
  std::string signs_string() const;
  /// "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]".
  std::string pd_string() const;

  /// Mirror image: every crossing switched.
  Diagram mirrored() const;

  /// Inserts a Reidemeister-I curl at sequence position `position` with the
  /// given sign; `over_first` selects which visit comes first.
  Diagram with_kink(std::size_t position, int sign, bool over_first) const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<Pass> passes_;
  std::vector<int> signs_;
  std::size_t arc_count_ = 0;
};

/// Parses "X[1,5,2,4] X[3,1,4,6] ..." (also accepts a "PD[...]" wrapper and
/// comma separators). Throws Error(ParseError).
std::vector<std::array<int, 4>> parse_pd(const std::string& text);

}  // namespace polyknot
