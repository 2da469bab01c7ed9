#include "polyknot/heptagon.hpp"

#include <algorithm>
#include <set>

#include "polyknot/errors.hpp"

namespace polyknot {

namespace {

void require_heptagon(const Polygon& p) {
  if (p.size() != 7) throw Error(ErrorKind::InvalidArgument, "expected a heptagon (n = 7)");
}

}  // namespace

std::pair<Sign, Sign> theta_signs(const Polygon& h, const Tolerance& tol) {
  require_heptagon(h);
  const Vec3& v1 = h[0];
  const Sign theta3 = orient_vectors(h[6] - v1, h[1] - v1, h[2] - v1, tol);
  const Sign theta6 = orient_vectors(h[5] - v1, h[6] - v1, h[1] - v1, tol);
  return {theta3, theta6};
}

std::array<int, 3> triangle_intersections(const Polygon& h, const Tolerance& tol) {
  require_heptagon(h);
  std::array<int, 3> out{};
  try {
    for (std::size_t k = 0; k < 3; ++k) {
      out[k] = segment_triangle_crossing(h[2 + k], h[3 + k], h[6], h[0], h[1], tol).value();
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateContact) {
      throw Error(ErrorKind::DegenerateConfiguration, std::string("triangle v7 v1 v2: ") + e.what());
    }
    throw;
  }
  return out;
}

XiReport xi(const Polygon& h, const Tolerance& tol) {
  require_heptagon(h);
  if (!is_embedded(h, tol).embedded()) throw Error(ErrorKind::NotEmbedded, "xi requires an embedded heptagon");
  XiReport r;
  std::tie(r.theta3, r.theta6) = theta_signs(h, tol);
  if (r.theta3.is_zero() || r.theta6.is_zero()) {
    throw Error(ErrorKind::NonGeneric, "theta3 or theta6 vanishes");
  }
  const auto ii = triangle_intersections(h, tol);
  r.i34 = ii[0];
  r.i45 = ii[1];
  r.i56 = ii[2];
  const int t3 = r.theta3.value();
  const int t6 = r.theta6.value();
  // (t3 + t6) and (t3 - t6) are even, so the halves are exact.
  r.xi = (t3 + t6) / 2 * (r.i34 + r.i45 + r.i56) + (t3 - t6) / 2 * (r.i34 - r.i56);

  const auto nonzero = [](int v) { return v != 0 ? 1 : 0; };
  if (t3 == t6) {
    r.figure_eight_consistent = nonzero(r.i34) + nonzero(r.i45) + nonzero(r.i56) == 1;
  } else {
    r.figure_eight_consistent = nonzero(r.i34) + nonzero(r.i56) == 1;
  }
  return r;
}

RegionCode region_code_hept(const Polygon& h, const Tolerance& tol) {
  require_heptagon(h);
  return region_code_of_base(forget_last(h), tol);
}

std::string word_string(const std::array<int, 4>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(word[i]);
  }
  return out;
}

std::size_t PermutahedronGraph::index_of(const std::array<int, 4>& word) const {
  const auto it = std::find(nodes.begin(), nodes.end(), word);
  if (it == nodes.end()) throw Error(ErrorKind::InvalidArgument, "not a permutation of (2,3,4,5)");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::size_t> PermutahedronGraph::neighbors(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const Edge& e : edges) {
    if (e.a == node) out.push_back(e.b);
    if (e.b == node) out.push_back(e.a);
  }
  return out;
}

bool PermutahedronGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
}

std::vector<std::vector<std::size_t>> PermutahedronGraph::faces() const {
  const auto swap_at = [&](std::size_t node, int position) {
    std::array<int, 4> w = nodes[node];
    std::swap(w[position], w[position + 1]);
    return index_of(w);
  };
  std::vector<std::vector<std::size_t>> out;
  std::set<std::set<std::size_t>> seen;
  const std::array<std::pair<int, int>, 3> generator_pairs{{{0, 2}, {0, 1}, {1, 2}}};
  for (const auto& [g, h] : generator_pairs) {
    for (std::size_t start = 0; start < nodes.size(); ++start) {
      std::vector<std::size_t> cycle{start};
      std::size_t cur = start;
      bool use_g = true;
      while (true) {
        cur = swap_at(cur, use_g ? g : h);
        use_g = !use_g;
        if (cur == start && use_g) break;
        cycle.push_back(cur);
      }
      std::set<std::size_t> key(cycle.begin(), cycle.end());
      if (seen.insert(key).second) out.push_back(std::move(cycle));
    }
  }
  return out;
}

std::string PermutahedronGraph::to_dot() const {
  std::string out = "graph permutahedron {\n";
  for (const Edge& e : edges) {
    out += "  \"" + word_string(nodes[e.a]) + "\" -- \"" + word_string(nodes[e.b]) + "\";\n";
  }
  out += "}\n";
  return out;
}

PermutahedronGraph permutahedron() {
  PermutahedronGraph g;
  std::array<int, 4> w{2, 3, 4, 5};
  do {
    g.nodes.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (int pos = 0; pos < 3; ++pos) {
      std::array<int, 4> v = g.nodes[a];
      std::swap(v[pos], v[pos + 1]);
      const std::size_t b = g.index_of(v);
      if (a < b) g.edges.push_back({a, b, pos});
    }
  }
  return g;
}

}  // namespace polyknot
