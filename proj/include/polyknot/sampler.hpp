#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyknot/heptagon.hpp"
#include "polyknot/hexagon.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/polygon.hpp"
#include "polyknot/region.hpp"

namespace polyknot {

/// SplitMix64 step, used to derive independent per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for sample `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

inline constexpr int kSamplingAttempts = 100000;

/// Vertices uniform in the unit cube, redrawn until embedded and generic.
/// Throws Error(SamplingFailed) after kSamplingAttempts draws.
Polygon random_polygon(std::size_t n, std::uint64_t seed, const Tolerance& tol = {});

/// Rotates the vertices strictly after i and strictly before j (cyclically)
/// about the line through p[i] and p[j]. Throws Error(DegenerateAxis) if
/// i == j or the two vertices coincide within tolerance.
Polygon crankshaft(const Polygon& p, std::size_t i, std::size_t j, double angle, const Tolerance& tol = {});

/// Planar regular n-gon with unit edges.
Polygon regular_polygon(std::size_t n);

/// `steps` accepted (embedded) crankshaft moves from the regular n-gon.
/// Throws Error(SamplingFailed) when acceptance stalls.
Polygon random_equilateral(std::size_t n, std::uint64_t seed, std::size_t steps, const Tolerance& tol = {});

struct IsotopyPath {
  std::vector<Polygon> frames;
  bool certified = false;
  /// Smallest clearance over all frames (0 if some frame is not embedded).
  double min_clearance = 0.0;
  /// Index of the first frame that fails (not embedded, or reached by a step
  /// that is too long for the previous frame's clearance).
  std::optional<std::size_t> first_failure;
  std::string reason;
};

/// Certified iff every frame is embedded and every step moves each vertex
/// by less than half the previous frame's clearance. Throws
/// Error(InvalidArgument) if the frames have different sizes.
IsotopyPath certify_path(std::vector<Polygon> frames, const Tolerance& tol = {});

/// Random walk of `steps` small moves starting at p, each accepted only if
/// the step keeps the path certified. Moves are crankshaft rotations when
/// `equilateral` is set, otherwise random vertex displacements.
std::vector<Polygon> random_walk(const Polygon& p, std::size_t steps, std::uint64_t seed, bool equilateral,
                                 const Tolerance& tol = {});

/// Every invariant computed for one sample, all on the same (possibly
/// perturbed) polygon.
struct SampleAnalysis {
  Polygon polygon;
  bool perturbed = false;
  std::optional<RegionCode> region;
  std::optional<JointClass> joint;
  std::optional<XiReport> xi;
  Identification knot;
};

/// Runs the invariants; on a NonGeneric or degenerate contact it retries
/// up to 8 times on perturbations of magnitude clearance / 1000, which
/// cannot leave the isotopy class. Region codes that do not exist (the base
/// winds around its axis) are left empty.
SampleAnalysis analyze(const Polygon& p, std::uint64_t seed, const Tolerance& tol = {});

struct CensusOptions {
  std::size_t n = 6;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool equilateral = false;
  /// Crankshaft moves per equilateral sample.
  std::size_t equilateral_steps = 64;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CensusBucket {
  std::string region;
  std::string invariant;
  std::string knot;
  std::size_t count = 0;
};

struct CensusReport {
  CensusOptions options;
  /// Sorted by (region, invariant, knot); counts sum to options.samples.
  std::vector<CensusBucket> histogram;

  bool operator==(const CensusReport& o) const;
};

/// Invariant column of a census row: the joint class "(d,c)" for hexagons,
/// "xi=+1" / "xi=-1" for figure-eight heptagons, "-" otherwise.
std::string invariant_label(const SampleAnalysis& a);

/// Deterministic for a given seed regardless of thread count. Samples whose
/// invariants cannot be computed are tallied under knot "error:<kind>".
CensusReport census(const CensusOptions& options, const Tolerance& tol = {});

}  // namespace polyknot
