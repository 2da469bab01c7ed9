#include "doctest.h"
#include "polyknot/diagram.hpp"
#include "polyknot/errors.hpp"
#include "support.hpp"

using namespace polyknot;

namespace {

Diagram trefoil() { return Diagram::from_gauss({1, -2, 3, -1, 2, -3}, {1, 1, 1}); }

}  // namespace

TEST_CASE("Gauss code round-trip and validation") {
  const Diagram d = trefoil();
  CHECK(d.crossing_count() == 3);
  CHECK(d.writhe() == 3);
  CHECK(d.gauss_code() == std::vector<int>{1, -2, 3, -1, 2, -3});
  CHECK(d.gauss_string() == "1 -2 3 -1 2 -3");
  CHECK(d.signs_string() == "+ + +");
  CHECK_THROWS_AS(Diagram::from_gauss({1, 2, -1, -2}, {1}), Error);
  CHECK_THROWS_AS(Diagram::from_gauss({1, 1, -2, -2}, {1, 1}), Error);
  CHECK_THROWS_AS(Diagram::from_gauss({1, -1}, {2}), Error);
}

TEST_CASE("PD code of the standard trefoil") {
  // passes: over1 under2 over3 under1 over2 under3
  CHECK(trefoil().pd_string() == "X[3,1,4,6] X[1,5,2,4] X[5,3,6,2]");
}

TEST_CASE("PD codes round-trip through from_pd") {
  for (const auto& b : testing::kBraids) {
    const Diagram d = Diagram::from_braid(b.strands, b.word);
    const Diagram e = Diagram::from_pd(d.pd_code());
    CHECK(e.crossing_count() == d.crossing_count());
    CHECK(e.pd_code() == d.pd_code());
    CHECK(e.writhe() == d.writhe());
    CHECK(e.signs() == d.signs());
    const Diagram m = d.mirrored();
    CHECK(Diagram::from_pd(m.pd_code()).signs() == m.signs());
  }
}

TEST_CASE("one-crossing PD codes keep their sign") {
  for (int sign : {1, -1}) {
    for (bool over_first : {true, false}) {
      const Diagram k = Diagram().with_kink(0, sign, over_first);
      const Diagram back = Diagram::from_pd(k.pd_code());
      CHECK(back.signs() == std::vector<int>{sign});
      CHECK(back.passes() == k.passes());
    }
  }
}

TEST_CASE("braid closures") {
  const Diagram d = Diagram::from_braid(2, {1, 1, 1});
  CHECK(d.crossing_count() == 3);
  CHECK(d.writhe() == 3);
  CHECK_THROWS_AS(Diagram::from_braid(2, {1, 1}), Error);  // two-component link
  CHECK_THROWS_AS(Diagram::from_braid(2, {2}), Error);
}

TEST_CASE("parse_pd") {
  const auto pd = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
  REQUIRE(pd.size() == 3);
  CHECK(pd[1] == std::array<int, 4>{3, 1, 4, 6});
  CHECK(parse_pd("X[1, 2, 2, 1]").size() == 1);
  CHECK_THROWS_AS(parse_pd("hello"), Error);
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), Error);
  CHECK_THROWS_AS(Diagram::from_pd({{1, 2, 3, 4}}), Error);
}

TEST_CASE("kink insertion and mirroring") {
  const Diagram d = trefoil();
  const Diagram k = d.with_kink(2, -1, true);
  CHECK(k.crossing_count() == 4);
  CHECK(k.writhe() == 2);
  CHECK(d.mirrored().writhe() == -3);
  CHECK(d.mirrored().mirrored() == d);
  CHECK_THROWS_AS(d.with_kink(99, 1, true), Error);
}
