#include "polyknot/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polyknot/errors.hpp"
#include "polyknot/io.hpp"
#include "polyknot/symmetry.hpp"

namespace polyknot {
namespace {

using nlohmann::json;

struct CliConfig {
  double eps = Tolerance::kDefaultEps;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool perturb = false;
  double perturb_magnitude = 1e-9;
};

constexpr int kProjectionRetries = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flattens a JSON object into "key: value" lines for --format text.
void print_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object()) {
        print_text(out, v, key);
      } else {
        out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

class Runner {
 public:
  Runner(std::ostream& out, const CliConfig& cfg) : out_(out), cfg_(cfg), tol_(cfg.eps) {}

  const Tolerance& tol() const { return tol_; }

  Polygon load(const std::string& path) const {
    Polygon p = parse_polygon(read_file(path), tol_);
    if (cfg_.perturb) {
      if (!(cfg_.perturb_magnitude > 0.0 && cfg_.perturb_magnitude < 1.0)) {
        throw UsageError("--perturb-magnitude must lie in (0, 1)");
      }
      p = perturb_generic(p, cfg_.perturb_magnitude, cfg_.seed, tol_);
    }
    return p;
  }

  // Applies f, retrying on perturbed copies when the input is non-generic.
  template <typename F>
  auto with_retries(const Polygon& p, F f, bool& perturbed) const {
    try {
      perturbed = false;
      return f(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGeneric && e.kind() != ErrorKind::DegenerateConfiguration) throw;
    }
    const auto report = is_embedded(p, tol_);
    if (!report.embedded()) throw Error(ErrorKind::NotEmbedded, "polygon is not embedded");
    const double magnitude = std::min(cfg_.perturb_magnitude, report.clearance / 8.0);
    for (int attempt = 0;; ++attempt) {
      const Polygon q = perturb_generic(p, magnitude, derive_seed(cfg_.seed, static_cast<std::uint64_t>(attempt)), tol_);
      try {
        perturbed = true;
        return f(q);
      } catch (const Error& e) {
        const bool retry = e.kind() == ErrorKind::NonGeneric || e.kind() == ErrorKind::DegenerateConfiguration;
        if (!retry || attempt + 1 >= kProjectionRetries) throw;
      }
    }
  }

  void emit(const json& j) const {
    if (cfg_.format == "text") {
      print_text(out_, j);
    } else {
      out_ << j.dump(2) << '\n';
    }
  }

  void emit_raw(const std::string& s) const { out_ << s; }
  const CliConfig& config() const { return cfg_; }

 private:
  std::ostream& out_;
  CliConfig cfg_;
  Tolerance tol_;
};

void require_size(const Polygon& p, std::size_t n, const char* what) {
  if (p.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " needs " + std::to_string(n) + " vertices, got " + std::to_string(p.size()));
  }
}

void cmd_check(const Runner& r, const std::string& file) {
  const Polygon p = r.load(file);
  json j = to_json(is_embedded(p, r.tol()));
  j["n"] = p.size();
  j["edge_lengths"] = edge_lengths(p);
  j["generic"] = is_generic(p, r.tol());
  r.emit(j);
}

void cmd_classify_hex(const Runner& r, const std::string& file) {
  const Polygon p = r.load(file);
  require_size(p, 6, "classify-hex");
  json j = to_json(joint_class(p, r.tol()));
  const auto d = triangle_deltas(p, r.tol());
  j["deltas"] = {d[0].value(), d[1].value(), d[2].value()};
  try {
    j["region"] = region_code_hex(p, r.tol()).str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGeneric) throw;
    j["region"] = nullptr;
  }
  r.emit(j);
}

void cmd_classify_hept(const Runner& r, const std::string& file) {
  const Polygon p = r.load(file);
  require_size(p, 7, "classify-hept");
  json j = to_json(xi(p, r.tol()));
  try {
    j["region"] = region_code_hept(p, r.tol()).str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGeneric) throw;
    j["region"] = nullptr;
  }
  bool perturbed = false;
  const auto id = r.with_retries(p, [&](const Polygon& q) { return identify_polygon(q, r.tol()); }, perturbed);
  j["knot"] = id.type.name;
  r.emit(j);
}

void cmd_region(const Runner& r, const std::string& file, bool as_base) {
  const Polygon p = r.load(file);
  RegionCode code;
  if (as_base || p.size() <= 5) {
    code = region_code_of_base(p, r.tol());
  } else if (p.size() == 6) {
    code = region_code_hex(p, r.tol());
  } else if (p.size() == 7) {
    code = region_code_hept(p, r.tol());
  } else {
    throw Error(ErrorKind::InvalidArgument, "region codes are defined for bases, hexagons and heptagons");
  }
  if (r.config().format == "text") {
    r.emit_raw(code.str() + "\n");
  } else {
    r.emit({{"region", code.str()}, {"word", code.word}});
  }
}

void cmd_act(const Runner& r, const std::string& file, const std::string& op, const std::string& out_file) {
  LabelAction action;
  try {
    action = parse_label_action(op);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Polygon q = polyknot::apply(action, r.load(file));
  const std::string text = r.config().format == "text" ? polygon_to_text(q) : polygon_to_json(q).dump(2) + "\n";
  if (out_file.empty()) {
    r.emit_raw(text);
  } else {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot write " + out_file);
    f << text;
  }
}

void cmd_project(const Runner& r, const std::string& file, const std::string& method, bool relabel) {
  const Polygon p = r.load(file);
  bool perturbed = false;
  json j;
  if (method == "radial") {
    struct Result {
      std::optional<HullRelabeling> hull;
      Diagram d;
    };
    const Result res = r.with_retries(
        p,
        [&](const Polygon& q) {
          if (!relabel) return Result{supporting_plane(q, 0, r.tol()), radial_diagram(q, r.tol())};
          const auto [relabeled, hull] = hull_relabel(q, r.tol());
          return Result{hull, radial_diagram(relabeled, r.tol())};
        },
        perturbed);
    j = to_json(res.d);
    if (res.hull) j["hull"] = to_json(*res.hull);
    j["bound"] = crossing_bound(static_cast<int>(p.size()));
  } else if (method == "orthogonal") {
    const Diagram d = r.with_retries(p, [&](const Polygon& q) { return orthogonal_diagram(q, r.tol()); }, perturbed);
    j = to_json(d);
    j["bound"] = orthogonal_crossing_bound(static_cast<int>(p.size()));
  } else {
    throw UsageError("--method must be radial or orthogonal");
  }
  j["method"] = method;
  j["perturbed"] = perturbed;
  if (r.config().format == "text") {
    std::string signs;
    for (int x : j["signs"]) signs += (signs.empty() ? "" : " ") + std::string(x > 0 ? "+" : "-");
    r.emit_raw("crossings: " + std::to_string(j["crossing_count"].get<std::size_t>()) + "\ngauss: " +
               j["gauss"].get<std::string>() + "\nsigns: " + signs + "\npd: " + j["pd"].get<std::string>() + "\n");
    return;
  }
  r.emit(j);
}

void cmd_identify(const Runner& r, const std::string& file) {
  const std::string text = read_file(file);
  json j;
  if (text.find("X[") != std::string::npos || text.find("PD[") != std::string::npos) {
    const Diagram d = Diagram::from_pd(parse_pd(text));
    j = to_json(identify(d));
    j["source"] = "pd";
  } else {
    const Polygon p = r.load(file);
    bool perturbed = false;
    j = to_json(r.with_retries(p, [&](const Polygon& q) { return identify_polygon(q, r.tol()); }, perturbed));
    j["source"] = "polygon";
    j["perturbed"] = perturbed;
  }
  r.emit(j);
}

void cmd_census(const Runner& r, CensusOptions opts, const std::string& out_file) {
  opts.seed = r.config().seed;
  if (opts.n < 3) throw UsageError("--n must be at least 3");
  const json j = to_json(census(opts, r.tol()));
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot write " + out_file);
    f << j.dump(2) << '\n';
  }
  if (r.config().format != "text") {
    r.emit(j);
    return;
  }
  std::ostringstream os;
  os << "n " << opts.n << ", samples " << opts.samples << ", seed " << opts.seed
     << (opts.equilateral ? ", equilateral" : "") << '\n';
  os << std::left << std::setw(10) << "region" << std::setw(10) << "invariant" << std::setw(24) << "knot" << "count\n";
  for (const auto& b : j["histogram"]) {
    os << std::setw(10) << b["region"].get<std::string>() << std::setw(10) << b["invariant"].get<std::string>()
       << std::setw(24) << b["knot"].get<std::string>() << b["count"].get<std::size_t>() << '\n';
  }
  r.emit_raw(os.str());
}

void cmd_path_check(const Runner& r, const std::string& file) {
  const auto frames = parse_polygon_list(read_file(file), r.tol());
  r.emit(to_json(certify_path(frames, r.tol())));
}

void cmd_permutahedron(const Runner& r) {
  const PermutahedronGraph g = permutahedron();
  if (r.config().format == "text") {
    r.emit_raw(g.to_dot());
  } else {
    r.emit(to_json(g));
  }
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric knot invariants of small polygons", "polyknot"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--tol", cfg.eps, "relative tolerance of the sign predicates")->check(CLI::Range(0.0, 1.0));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "seed for perturbations and sampling");
  app.add_flag("--perturb", cfg.perturb, "perturb input polygons before processing");
  app.add_option("--perturb-magnitude", cfg.perturb_magnitude, "radius of the vertex perturbation");

  std::string file;
  std::string op;
  std::string out_file;
  std::string method = "radial";
  bool no_relabel = false;
  bool as_base = false;
  CensusOptions census_opts;

  auto* check = app.add_subcommand("check", "embedding report");
  check->add_option("file", file, "polygon file")->required();
  auto* hex = app.add_subcommand("classify-hex", "joint chirality-curl class of a hexagon");
  hex->add_option("file", file, "polygon file")->required();
  auto* hept = app.add_subcommand("classify-hept", "xi report of a heptagon");
  hept->add_option("file", file, "polygon file")->required();
  auto* region = app.add_subcommand("region", "region code");
  region->add_option("file", file, "polygon file")->required();
  region->add_flag("--base", as_base, "treat the input as the base polygon");
  auto* act = app.add_subcommand("act", "apply a relabeling or mirror");
  act->add_option("file", file, "polygon file")->required();
  act->add_option("--op", op, "reverse | mirror | rotate:k")->required();
  act->add_option("--out", out_file, "write the result here");
  auto* project = app.add_subcommand("project", "knot diagram of a polygon");
  project->add_option("file", file, "polygon file")->required();
  project->add_option("--method", method, "radial | orthogonal");
  project->add_flag("--no-relabel", no_relabel, "project from v1 as given");
  auto* ident = app.add_subcommand("identify", "knot type of a polygon or PD code");
  ident->add_option("file", file, "polygon or PD file")->required();
  auto* cen = app.add_subcommand("census", "sample polygons and tally invariants");
  cen->add_option("--n", census_opts.n, "vertex count")->required();
  cen->add_option("--samples", census_opts.samples, "number of samples");
  cen->add_flag("--equilateral", census_opts.equilateral, "sample by crankshaft moves");
  cen->add_option("--steps", census_opts.equilateral_steps, "crankshaft moves per equilateral sample");
  cen->add_option("--threads", census_opts.threads, "worker threads (0 = all cores)");
  cen->add_option("--out", out_file, "also write the report here");
  auto* path = app.add_subcommand("path-check", "certify a discrete isotopy path");
  path->add_option("file", file, "JSON array of polygons")->required();
  auto* perm = app.add_subcommand("permutahedron", "graph of heptagon region codes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_object("UsageError", e.what()).dump(2) << '\n';
    err << "polyknot: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Runner r(out, cfg);
    if (*check) cmd_check(r, file);
    else if (*hex) cmd_classify_hex(r, file);
    else if (*hept) cmd_classify_hept(r, file);
    else if (*region) cmd_region(r, file, as_base);
    else if (*act) cmd_act(r, file, op, out_file);
    else if (*project) cmd_project(r, file, method, !no_relabel);
    else if (*ident) cmd_identify(r, file);
    else if (*cen) cmd_census(r, census_opts, out_file);
    else if (*path) cmd_path_check(r, file);
    else if (*perm) cmd_permutahedron(r);
    return kExitOk;
  } catch (const UsageError& e) {
    out << error_object("UsageError", e.what()).dump(2) << '\n';
    err << "polyknot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    const std::string kind(to_string(e.kind()));
    out << error_object(kind, e.what()).dump(2) << '\n';
    err << "polyknot: " << kind << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomainError;
  }
}

}  // namespace polyknot
