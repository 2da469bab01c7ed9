#include "polyknot/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "polyknot/errors.hpp"

namespace polyknot {
namespace {

using nlohmann::json;

Polygon from_vertices(std::vector<Vec3> v, const Tolerance& tol) {
  if (v.size() < 3) throw Error(ErrorKind::ParseError, "a polygon needs at least three vertices");
  for (const Vec3& x : v) {
    if (!x.finite()) throw Error(ErrorKind::ParseError, "non-finite coordinate");
  }
  try {
    return Polygon(std::move(v), tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Polygon polygon_from_json(const json& j, const Tolerance& tol) {
  const json* verts = &j;
  if (j.is_object()) {
    if (!j.contains("vertices")) throw Error(ErrorKind::ParseError, "polygon object lacks \"vertices\"");
    verts = &j.at("vertices");
  }
  if (!verts->is_array()) throw Error(ErrorKind::ParseError, "vertices must be an array");
  std::vector<Vec3> v;
  for (const json& t : *verts) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::ParseError, "each vertex is an [x, y, z] triple");
    for (const json& c : t) {
      if (!c.is_number()) throw Error(ErrorKind::ParseError, "coordinates must be numbers");
    }
    v.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
  }
  return from_vertices(std::move(v), tol);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Polygon parse_polygon(const std::string& text, const Tolerance& tol) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return polygon_from_json(parse_json(text), tol);
  }
  std::vector<Vec3> v;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<double> nums;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "not a number: " + tok);
      }
      if (used != tok.size()) throw Error(ErrorKind::ParseError, "not a number: " + tok);
      nums.push_back(x);
    }
    if (nums.empty()) continue;
    if (nums.size() != 3) throw Error(ErrorKind::ParseError, "each line holds one x y z triple");
    v.push_back({nums[0], nums[1], nums[2]});
  }
  return from_vertices(std::move(v), tol);
}

std::vector<Polygon> parse_polygon_list(const std::string& text, const Tolerance& tol) {
  const json j = parse_json(text);
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a JSON array of polygons");
  std::vector<Polygon> out;
  for (const json& p : j) out.push_back(polygon_from_json(p, tol));
  return out;
}

json polygon_to_json(const Polygon& p) {
  json verts = json::array();
  for (const Vec3& v : p.vertices()) verts.push_back({v.x, v.y, v.z});
  return {{"vertices", verts}};
}

std::string polygon_to_text(const Polygon& p) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Vec3& v : p.vertices()) os << v.x << ' ' << v.y << ' ' << v.z << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const EmbeddingReport& r) {
  json j = {{"status", to_string(r.status)}, {"embedded", r.embedded()}, {"clearance", r.clearance},
            {"pairs_checked", r.pairs_checked}};
  j["witness"] = r.witness ? json::array({r.witness->first, r.witness->second}) : json(nullptr);
  return j;
}

json to_json(const JointClass& c) {
  return {{"chirality", c.chirality.value()}, {"curl", c.curlpart.value()}, {"class", c.knot_name()}};
}

json to_json(const XiReport& x) {
  return {{"theta3", x.theta3.value()}, {"theta6", x.theta6.value()}, {"i34", x.i34}, {"i45", x.i45},
          {"i56", x.i56}, {"xi", x.xi}, {"figure_eight_consistent", x.figure_eight_consistent}};
}

json to_json(const Diagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back({{"over_position", c.over_position}, {"under_position", c.under_position}, {"sign", c.sign}});
  }
  json pd = json::array();
  for (const auto& x : d.pd_code()) pd.push_back(x);
  return {{"arcs", d.arc_count()},         {"crossing_count", d.crossing_count()}, {"writhe", d.writhe()},
          {"gauss_code", d.gauss_code()},  {"signs", d.signs()},                   {"crossings", crossings},
          {"pd_code", pd},                 {"gauss", d.gauss_string()},            {"pd", d.pd_string()}};
}

json to_json(const Identification& id) {
  return {{"knot", id.type.name},          {"jones", id.jones.to_string("t")}, {"determinant", id.determinant},
          {"crossings", id.crossings},     {"writhe", id.writhe}};
}

json to_json(const HullRelabeling& h) {
  const Vec3& n = h.supporting_plane_normal;
  return {{"pivot_index", h.pivot_index}, {"supporting_plane_normal", {n.x, n.y, n.z}}, {"margin", h.margin}};
}

json to_json(const IsotopyPath& p) {
  json j = {{"frames", p.frames.size()}, {"certified", p.certified}, {"min_clearance", p.min_clearance}};
  j["first_failure"] = p.first_failure ? json(*p.first_failure) : json(nullptr);
  j["reason"] = p.reason;
  return j;
}

json to_json(const CensusReport& r) {
  json hist = json::array();
  for (const auto& b : r.histogram) {
    hist.push_back({{"region", b.region}, {"invariant", b.invariant}, {"knot", b.knot}, {"count", b.count}});
  }
  return {{"n", r.options.n},
          {"samples", r.options.samples},
          {"seed", r.options.seed},
          {"equilateral", r.options.equilateral},
          {"equilateral_steps", r.options.equilateral_steps},
          {"histogram", hist}};
}

json to_json(const PermutahedronGraph& g) {
  json nodes = json::array();
  for (const auto& w : g.nodes) nodes.push_back(word_string(w));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"position", e.position}});
  std::size_t squares = 0;
  std::size_t hexagons = 0;
  for (const auto& f : g.faces()) (f.size() == 4 ? squares : hexagons) += 1;
  return {{"nodes", nodes}, {"edges", edges}, {"node_count", g.nodes.size()}, {"edge_count", g.edges.size()},
          {"square_faces", squares}, {"hexagonal_faces", hexagons}};
}

CensusReport census_from_json(const json& j) {
  try {
    CensusReport r;
    r.options.n = j.at("n").get<std::size_t>();
    r.options.samples = j.at("samples").get<std::size_t>();
    r.options.seed = j.at("seed").get<std::uint64_t>();
    r.options.equilateral = j.at("equilateral").get<bool>();
    r.options.equilateral_steps = j.at("equilateral_steps").get<std::size_t>();
    for (const json& b : j.at("histogram")) {
      r.histogram.push_back({b.at("region").get<std::string>(), b.at("invariant").get<std::string>(),
                             b.at("knot").get<std::string>(), b.at("count").get<std::size_t>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed census report: ") + e.what());
  }
}

}  // namespace polyknot
