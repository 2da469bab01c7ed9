#include "polyknot/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <thread>
#include <tuple>

#include "polyknot/errors.hpp"

namespace polyknot {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull));
}

Polygon random_polygon(std::size_t n, std::uint64_t seed, const Tolerance& tol) {
  if (n < 3) throw Error(ErrorKind::PolygonTooSmall, "polygons need at least three vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec3> v(n);
  for (int attempt = 0; attempt < kSamplingAttempts; ++attempt) {
    for (Vec3& x : v) x = {unit(rng), unit(rng), unit(rng)};
    try {
      Polygon p(v, tol);
      if (is_generic(p, tol)) return p;
    } catch (const Error&) {
      // coincident vertices; redraw
    }
  }
  throw Error(ErrorKind::SamplingFailed, "no embedded generic polygon found");
}

Polygon crankshaft(const Polygon& p, std::size_t i, std::size_t j, double angle, const Tolerance& tol) {
  const std::size_t n = p.size();
  if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "crankshaft pivot out of range");
  if (i == j) throw Error(ErrorKind::DegenerateAxis, "crankshaft pivots must differ");
  const Vec3 axis = p[j] - p[i];
  double scale = 0.0;
  for (const Vec3& v : p.vertices()) scale = std::max(scale, norm(v - p[i]));
  if (norm(axis) <= tol.eps() * std::max(scale, 1.0)) throw Error(ErrorKind::DegenerateAxis, "crankshaft axis is degenerate");
  const Vec3 k = normalized(axis);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Vec3> out(p.vertices().begin(), p.vertices().end());
  for (std::size_t idx = (i + 1) % n; idx != j; idx = (idx + 1) % n) {
    // Rodrigues rotation about the line through p[i].
    const Vec3 r = p[idx] - p[i];
    out[idx] = p[i] + r * c + cross(k, r) * s + k * (dot(k, r) * (1.0 - c));
  }
  return Polygon(std::move(out), tol);
}

Polygon regular_polygon(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::PolygonTooSmall, "polygons need at least three vertices");
  const double radius = 0.5 / std::sin(std::numbers::pi / static_cast<double>(n));
  std::vector<Vec3> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    v.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
  }
  return Polygon(std::move(v));
}

namespace {

// Draws pivots with at least one vertex strictly between them on each side
// so the move is not a rigid motion of the whole polygon.
std::pair<std::size_t, std::size_t> draw_pivots(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<std::size_t> gap(2, n - 2);
  const std::size_t i = pick(rng);
  return {i, (i + gap(rng)) % n};
}

}  // namespace

Polygon random_equilateral(std::size_t n, std::uint64_t seed, std::size_t steps, const Tolerance& tol) {
  Polygon p = regular_polygon(n);
  if (n < 4 || steps == 0) return p;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const std::size_t budget = 1000 + 1000 * steps;
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < budget && accepted < steps; ++attempt) {
    const auto [i, j] = draw_pivots(rng, n);
    Polygon q = crankshaft(p, i, j, angle(rng), tol);
    if (is_embedded(q, tol).embedded()) {
      p = std::move(q);
      ++accepted;
    }
  }
  if (accepted < steps) throw Error(ErrorKind::SamplingFailed, "crankshaft walk stalled");
  return p;
}

IsotopyPath certify_path(std::vector<Polygon> frames, const Tolerance& tol) {
  IsotopyPath path;
  path.frames = std::move(frames);
  path.certified = true;
  path.min_clearance = std::numeric_limits<double>::infinity();
  if (path.frames.empty()) {
    path.min_clearance = 0.0;
    return path;
  }
  const std::size_t n = path.frames.front().size();
  for (const Polygon& f : path.frames) {
    if (f.size() != n) throw Error(ErrorKind::InvalidArgument, "path frames differ in vertex count");
  }
  const auto fail = [&](std::size_t k, std::string why) {
    if (path.certified) {
      path.certified = false;
      path.first_failure = k;
      path.reason = std::move(why);
    }
  };
  double previous = 0.0;
  for (std::size_t k = 0; k < path.frames.size(); ++k) {
    const auto report = is_embedded(path.frames[k], tol);
    const double clearance = report.embedded() ? report.clearance : 0.0;
    path.min_clearance = std::min(path.min_clearance, clearance);
    if (!report.embedded()) fail(k, "frame is not embedded");
    if (k > 0) {
      const double step = max_vertex_displacement(path.frames[k - 1], path.frames[k]);
      if (!(step < previous / 2.0)) fail(k, "step exceeds half the previous clearance");
    }
    previous = clearance;
  }
  return path;
}

std::vector<Polygon> random_walk(const Polygon& p, std::size_t steps, std::uint64_t seed, bool equilateral,
                                 const Tolerance& tol) {
  const auto start = is_embedded(p, tol);
  if (!start.embedded()) throw Error(ErrorKind::NotEmbedded, "walks start from an embedded polygon");
  const std::size_t n = p.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Polygon> frames{p};
  frames.reserve(steps + 1);
  double clearance = start.clearance;
  for (std::size_t s = 0; s < steps; ++s) {
    const Polygon& cur = frames.back();
    bool moved = false;
    for (int attempt = 0; attempt < 1000 && !moved; ++attempt) {
      std::optional<Polygon> next;
      try {
        if (equilateral && n >= 4) {
          const auto [i, j] = draw_pivots(rng, n);
          next = crankshaft(cur, i, j, unit(rng) * 0.5, tol);
        } else {
          std::vector<Vec3> v(cur.vertices().begin(), cur.vertices().end());
          Vec3 d;
          do {
            d = {unit(rng), unit(rng), unit(rng)};
          } while (dot(d, d) > 1.0);
          v[pick(rng)] += d * (0.45 * clearance);
          next = Polygon(std::move(v), tol);
        }
      } catch (const Error&) {
        continue;
      }
      if (!(max_vertex_displacement(cur, *next) < clearance / 2.0)) continue;
      const auto report = is_embedded(*next, tol);
      if (!report.embedded()) continue;
      clearance = report.clearance;
      frames.push_back(std::move(*next));
      moved = true;
    }
    if (!moved) throw Error(ErrorKind::SamplingFailed, "random walk could not take a certified step");
  }
  return frames;
}

namespace {

SampleAnalysis analyze_once(const Polygon& p, const Tolerance& tol) {
  SampleAnalysis a{p, false, std::nullopt, std::nullopt, std::nullopt, {}};
  const std::size_t n = p.size();
  if (n == 6 || n == 7) {
    try {
      a.region = n == 6 ? region_code_hex(p, tol) : region_code_hept(p, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGeneric) throw;
    }
  }
  if (n == 6) a.joint = joint_class(p, tol);
  a.knot = identify_polygon(p, tol);
  if (n == 7 && a.knot.type.name == "4_1") a.xi = xi(p, tol);
  return a;
}

bool retryable(ErrorKind k) {
  return k == ErrorKind::NonGeneric || k == ErrorKind::DegenerateConfiguration || k == ErrorKind::DegenerateContact;
}

}  // namespace

SampleAnalysis analyze(const Polygon& p, std::uint64_t seed, const Tolerance& tol) {
  const auto report = is_embedded(p, tol);
  if (!report.embedded()) throw Error(ErrorKind::NotEmbedded, "analysis needs an embedded polygon");
  try {
    return analyze_once(p, tol);
  } catch (const Error& e) {
    if (!retryable(e.kind())) throw;
  }
  constexpr int kRetries = 8;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const Polygon q = perturb_generic(p, report.clearance / 1000.0, derive_seed(seed, static_cast<std::uint64_t>(attempt)), tol);
    try {
      SampleAnalysis a = analyze_once(q, tol);
      a.perturbed = true;
      return a;
    } catch (const Error& e) {
      if (!retryable(e.kind()) || attempt + 1 == kRetries) throw;
    }
  }
  throw Error(ErrorKind::PerturbationFailed, "analysis failed on every perturbation");
}

std::string invariant_label(const SampleAnalysis& a) {
  const auto s = [](Sign x) { return x.value() > 0 ? std::string("+1") : x.value() < 0 ? std::string("-1") : std::string("0"); };
  if (a.joint) return "(" + s(a.joint->chirality) + "," + s(a.joint->curlpart) + ")";
  if (a.xi) return a.xi->xi > 0 ? "xi=+1" : (a.xi->xi < 0 ? "xi=-1" : "xi=0");
  return "-";
}

bool CensusReport::operator==(const CensusReport& o) const {
  if (histogram.size() != o.histogram.size()) return false;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    const auto& a = histogram[i];
    const auto& b = o.histogram[i];
    if (a.region != b.region || a.invariant != b.invariant || a.knot != b.knot || a.count != b.count) return false;
  }
  return options.n == o.options.n && options.samples == o.options.samples && options.seed == o.options.seed &&
         options.equilateral == o.options.equilateral && options.equilateral_steps == o.options.equilateral_steps;
}

CensusReport census(const CensusOptions& options, const Tolerance& tol) {
  if (options.n < 3) throw Error(ErrorKind::PolygonTooSmall, "polygons need at least three vertices");
  using Key = std::tuple<std::string, std::string, std::string>;
  std::vector<Key> keys(options.samples);

  const auto work = [&](std::size_t i) {
    const std::uint64_t s = derive_seed(options.seed, i);
    try {
      const Polygon p = options.equilateral ? random_equilateral(options.n, s, options.equilateral_steps, tol)
                                            : random_polygon(options.n, s, tol);
      const SampleAnalysis a = analyze(p, splitmix64(s), tol);
      keys[i] = {a.region ? a.region->str() : "-", invariant_label(a), a.knot.type.name};
    } catch (const Error& e) {
      keys[i] = {"-", "-", "error:" + std::string(to_string(e.kind()))};
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.samples, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < options.samples; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < options.samples; i = next++) work(i);
      });
    }
  }

  std::map<Key, std::size_t> counts;
  for (const Key& k : keys) ++counts[k];
  CensusReport report;
  report.options = options;
  for (const auto& [k, c] : counts) report.histogram.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  return report;
}

}  // namespace polyknot
