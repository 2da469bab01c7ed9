#include <random>

#include "doctest.h"
#include "polyknot/errors.hpp"
#include "polyknot/hexagon.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/sampler.hpp"
#include "polyknot/symmetry.hpp"
#include "support.hpp"

using namespace polyknot;

TEST_CASE("reverse keeps v1 and reverses the rest") {
  const Polygon h = testing::hexagon_trefoil();
  const Polygon r = reverse(h);
  CHECK(r[0] == h[0]);
  for (std::size_t i = 1; i < 6; ++i) CHECK(r[i] == h[6 - i]);
  CHECK(reverse(r) == h);
}

TEST_CASE("rotate_labels shifts cyclically") {
  const Polygon h = testing::hexagon_trefoil();
  CHECK(rotate_labels(h, 0) == h);
  const Polygon s = rotate_labels(h, 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(s[i] == h[(i + 1) % 6]);
  Polygon p = h;
  for (int k = 0; k < 6; ++k) p = rotate_labels(p, 1);
  CHECK(p == h);
  CHECK_THROWS_AS(rotate_labels(h, 6), Error);
}

TEST_CASE("mirror is an involution") {
  const Polygon h = testing::hexagon_trefoil();
  CHECK(mirror(mirror(h)) == h);
  CHECK(mirror(h)[3].z == -h[3].z);
}

TEST_CASE("dihedral relation r s r = s^(n-1)") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const Polygon p = random_polygon(n, n);
    CHECK(reverse(rotate_labels(reverse(p), 1)) == rotate_labels(p, n - 1));
  }
}

TEST_CASE("curl flips under r and s on the trefoil") {
  const Polygon h = testing::hexagon_trefoil();
  CHECK(curl(h) == Sign::positive());
  CHECK(curl(reverse(h)) == Sign::negative());
  CHECK(curl(rotate_labels(h, 1)) == Sign::negative());
}

TEST_CASE("actions preserve embedding, clearance and knot type") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Polygon p = random_polygon(6 + seed % 3, seed);
    const auto base = is_embedded(p);
    const auto type = analyze(p, seed).knot.type;
    for (const LabelAction& a : {LabelAction{Reverse{}}, LabelAction{Rotate{1}}, LabelAction{Rotate{2}}}) {
      const Polygon q = polyknot::apply(a, p);
      const auto r = is_embedded(q);
      CHECK(r.embedded() == base.embedded());
      CHECK(r.clearance == doctest::Approx(base.clearance).epsilon(1e-12));
      CHECK(analyze(q, seed).knot.type == type);
    }
    const Polygon m = mirror(p);
    CHECK(is_embedded(m).clearance == doctest::Approx(base.clearance).epsilon(1e-12));
    CHECK(analyze(m, seed).knot.type == mirror_type(type));
  }
}

TEST_CASE("parse_label_action") {
  CHECK(std::holds_alternative<Reverse>(parse_label_action("reverse")));
  CHECK(std::holds_alternative<Mirror>(parse_label_action("mirror")));
  CHECK(std::get<Rotate>(parse_label_action("rotate:3")).k == 3);
  CHECK_THROWS_AS(parse_label_action("rotate:"), Error);
  CHECK_THROWS_AS(parse_label_action("rotate:-1"), Error);
  CHECK_THROWS_AS(parse_label_action("flip"), Error);
}
