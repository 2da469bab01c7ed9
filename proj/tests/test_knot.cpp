#include <set>

#include "doctest.h"
#include "polyknot/errors.hpp"
#include "polyknot/knot.hpp"
#include "support.hpp"

using namespace polyknot;

namespace {

Diagram trefoil() { return Diagram::from_gauss({1, -2, 3, -1, 2, -3}, {1, 1, 1}); }
Diagram braid(const char* name) {
  for (const auto& b : testing::kBraids)
    if (std::string(b.name) == name) return Diagram::from_braid(b.strands, b.word);
  throw std::runtime_error("no braid");
}

}  // namespace

TEST_CASE("bracket normalisation and kinks") {
  CHECK(kauffman_bracket(Diagram()) == LaurentPolynomial(1));
  CHECK(kauffman_bracket(Diagram().with_kink(0, 1, true)) == LaurentPolynomial{{3, -1}});
  CHECK(kauffman_bracket(Diagram().with_kink(0, 1, false)) == LaurentPolynomial{{3, -1}});
  CHECK(kauffman_bracket(Diagram().with_kink(0, -1, true)) == LaurentPolynomial{{-3, -1}});
}

TEST_CASE("trefoil bracket from the eight-state enumeration") {
  // aaa: A^3 d, three aab: 3A, three abb: 3A^-1 d, bbb: A^-3 d^2, d = -A^2 - A^-2
  CHECK(kauffman_bracket(trefoil()) == LaurentPolynomial{{-7, 1}, {-3, -1}, {5, -1}});
}

TEST_CASE("state sum agrees with a skein-recursion oracle") {
  for (const auto& b : testing::kBraids) {
    const Diagram d = Diagram::from_braid(b.strands, b.word);
    CHECK(testing::to_poly(kauffman_bracket(d)) == testing::skein_bracket(d.pd_code()));
    const Diagram k = d.with_kink(3, -1, false).with_kink(0, 1, true);
    CHECK(testing::to_poly(kauffman_bracket(k)) == testing::skein_bracket(k.pd_code()));
  }
}

TEST_CASE("jones values of the trefoil and figure-eight") {
  CHECK(jones(trefoil()) == LaurentPolynomial{{1, 1}, {3, 1}, {4, -1}});
  CHECK(jones(trefoil().mirrored()) == LaurentPolynomial{{-1, 1}, {-3, 1}, {-4, -1}});
  const LaurentPolynomial fig8{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}};
  CHECK(jones(braid("4_1")) == fig8);
  CHECK(jones(braid("4_1").mirrored()) == fig8);
  CHECK(jones(Diagram()) == LaurentPolynomial(1));
}

TEST_CASE("determinants") {
  CHECK(determinant(Diagram()) == 1);
  CHECK(determinant(trefoil()) == 3);
  CHECK(determinant(braid("4_1")) == 5);
  for (const auto& b : testing::kBraids) CHECK(determinant(Diagram::from_braid(b.strands, b.word)) % 2 == 1);
}

TEST_CASE("jones is invariant under kinks and negates exponents under mirroring") {
  for (const auto& b : testing::kBraids) {
    const Diagram d = Diagram::from_braid(b.strands, b.word);
    const auto v = jones(d);
    CHECK(jones(d.mirrored()) == v.mirrored());
    for (int sign : {1, -1})
      for (bool over_first : {true, false}) {
        const Diagram k = d.with_kink(1, sign, over_first);
        CHECK(jones(k) == v);
        CHECK(kauffman_bracket(k) == kauffman_bracket(d) * LaurentPolynomial{{3 * sign, -1}});
      }
  }
}

TEST_CASE("braid closures identify as the tabulated knots") {
  for (const auto& b : testing::kBraids) {
    const Diagram d = Diagram::from_braid(b.strands, b.word);
    const KnotType t = identify(d).type;
    const KnotType expect{b.name};
    CHECK((t == expect || t == mirror_type(expect)));
    CHECK(identify(d.mirrored()).type == mirror_type(t));
  }
  // positive braids close to the unprefixed chirality
  CHECK(identify(braid("3_1")).type.name == "3_1");
  CHECK(identify(braid("5_1")).type.name == "5_1");
  CHECK(identify(braid("8_19")).type.name == "8_19");
  CHECK(identify(braid("3_1#3_1")).type.name == "3_1#3_1");
  CHECK(identify(braid("3_1#-3_1")).type.name == "3_1#-3_1");
}

TEST_CASE("the table is a set of distinct certificates") {
  const auto& table = knot_table();
  CHECK(table.size() == 20);
  std::set<std::string> names;
  for (std::size_t i = 0; i < table.size(); ++i) {
    names.insert(table[i].type.name);
    CHECK(table[i].jones.evaluate(1) == 1);
    for (std::size_t j = i + 1; j < table.size(); ++j) CHECK_FALSE(table[i].jones == table[j].jones);
  }
  CHECK(names.size() == table.size());
  const std::map<std::string, std::int64_t> dets = {{"unknot", 1}, {"3_1", 3},     {"4_1", 5},      {"5_1", 5},
                                                    {"5_2", 7},    {"6_1", 9},     {"6_2", 11},     {"6_3", 13},
                                                    {"8_19", 3},   {"8_20", 9},    {"3_1#3_1", 9},  {"3_1#-3_1", 9}};
  for (const auto& e : table) {
    const std::string base = e.type.name[0] == '-' ? e.type.name.substr(1) : e.type.name;
    CHECK(e.determinant == dets.at(base));
  }
}

TEST_CASE("knots outside the table are unknown") {
  CHECK_FALSE(identify(Diagram::from_braid(2, {1, 1, 1, 1, 1, 1, 1})).type.known());  // 7_1
}

TEST_CASE("state sum refuses more than 16 crossings") {
  const Diagram big = Diagram::from_braid(2, std::vector<int>(17, 1));
  try {
    kauffman_bracket(big);
    FAIL("expected TooManyCrossings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyCrossings);
  }
}

TEST_CASE("mirror_type") {
  CHECK(mirror_type(KnotType{"3_1"}).name == "-3_1");
  CHECK(mirror_type(KnotType{"-5_2"}).name == "5_2");
  CHECK(mirror_type(KnotType{"4_1"}).name == "4_1");
  CHECK(mirror_type(KnotType{"3_1#-3_1"}).name == "3_1#-3_1");
  CHECK(mirror_type(KnotType{"unknown"}).name == "unknown");
}
