#include <algorithm>
#include <set>

#include "doctest.h"
#include "polyknot/errors.hpp"
#include "polyknot/heptagon.hpp"
#include "polyknot/io.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/symmetry.hpp"
#include "support.hpp"

using namespace polyknot;

namespace {

std::vector<Polygon> figure_eights() {
  std::vector<Polygon> out;
  for (int k = 0; k < 6; ++k) {
    out.push_back(parse_polygon(read_file(testing::fixture_path("figure_eight/heptagon_4_1_" + std::to_string(k) + ".json"))));
  }
  return out;
}

int sgn(long double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("figure-eight fixtures identify as 4_1 with xi = +-1") {
  std::set<int> seen;
  for (const Polygon& h : figure_eights()) {
    CHECK(identify_polygon(h).type.name == "4_1");
    const XiReport x = xi(h);
    CHECK((x.xi == 1 || x.xi == -1));
    CHECK(x.figure_eight_consistent);
    seen.insert(x.xi);
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("xi ingredients agree with independent oracles") {
  for (const Polygon& h : figure_eights()) {
    const auto [t3, t6] = theta_signs(h);
    CHECK(t3.value() == sgn(testing::det3(h[6] - h[0], h[1] - h[0], h[2] - h[0])));
    CHECK(t6.value() == sgn(testing::det3(h[5] - h[0], h[6] - h[0], h[1] - h[0])));
    const auto ints = triangle_intersections(h);
    for (int k = 0; k < 3; ++k) {
      CHECK(ints[static_cast<std::size_t>(k)] ==
            testing::moller_trumbore(h[2 + k], h[3 + k], h[6], h[0], h[1]));
    }
    const XiReport x = xi(h);
    const int a = t3.value(), b = t6.value();
    CHECK(2 * x.xi == (a + b) * (ints[0] + ints[1] + ints[2]) + (a - b) * (ints[0] - ints[2]));
  }
}

TEST_CASE("xi under the dihedral actions and mirror") {
  for (const Polygon& h : figure_eights()) {
    const int x = xi(h).xi;
    CHECK(xi(reverse(h)).xi == -x);
    CHECK(xi(rotate_labels(h, 1)).xi == x);
    CHECK(xi(mirror(h)).xi == x);
  }
}

TEST_CASE("heptagon region codes are permutations of 2..5") {
  for (const Polygon& h : figure_eights()) {
    try {
      auto w = region_code_hept(h).word;
      std::sort(w.begin(), w.end());
      CHECK(w == std::vector<int>{2, 3, 4, 5});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonGeneric);
    }
  }
}

TEST_CASE("xi demands a heptagon with non-zero thetas") {
  CHECK_THROWS_AS(xi(testing::hexagon_trefoil()), Error);
  // v1, v2, v3, v7 coplanar
  const Polygon flat(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0.5, 0.5, 1}, {0.2, 1.5, 0.3}, {-0.5, 1, 0.5}, {-0.5, 0.5, 0}});
  try {
    xi(flat);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::NonGeneric || e.kind() == ErrorKind::NotEmbedded));
  }
}

TEST_CASE("permutahedron: 24 nodes, 36 edges, degree 3, 6 squares, 8 hexagons") {
  const PermutahedronGraph g = permutahedron();
  CHECK(g.nodes.size() == 24);
  CHECK(g.edges.size() == 36);
  for (std::size_t v = 0; v < g.nodes.size(); ++v) CHECK(g.neighbors(v).size() == 3);
  std::size_t squares = 0, hexagons = 0;
  const auto faces = g.faces();
  for (const auto& f : faces) {
    (f.size() == 4 ? squares : hexagons)++;
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(g.adjacent(f[i], f[(i + 1) % f.size()]));
  }
  CHECK(squares == 6);
  CHECK(hexagons == 8);
  // Euler characteristic of the sphere
  CHECK(static_cast<long>(g.nodes.size()) - static_cast<long>(g.edges.size()) + static_cast<long>(faces.size()) == 2);
}

TEST_CASE("permutahedron: brute-force 4-cycles are exactly the squares") {
  const PermutahedronGraph g = permutahedron();
  const std::size_t n = g.nodes.size();
  std::set<std::set<std::size_t>> cycles;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : g.neighbors(a))
      for (std::size_t c : g.neighbors(b))
        for (std::size_t d : g.neighbors(c)) {
          if (c == a || d == b || d == a) continue;
          if (g.adjacent(d, a)) cycles.insert({a, b, c, d});
        }
  CHECK(cycles.size() == 6);
}

TEST_CASE("permutahedron is vertex-transitive under relabeling") {
  const PermutahedronGraph g = permutahedron();
  std::array<int, 4> perm{2, 3, 4, 5};
  do {
    // relabel values 2..5 by perm
    for (const auto& e : g.edges) {
      auto map = [&](std::array<int, 4> w) {
        for (int& x : w) x = perm[static_cast<std::size_t>(x - 2)];
        return w;
      };
      CHECK(g.adjacent(g.index_of(map(g.nodes[e.a])), g.index_of(map(g.nodes[e.b]))));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("permutahedron DOT export") {
  const std::string dot = permutahedron().to_dot();
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), ';') >= 36);
  CHECK(dot.find("--") != std::string::npos);
}
