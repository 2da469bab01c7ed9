#include "polyknot/knot.hpp"

#include <map>
#include <numeric>

#include "polyknot/errors.hpp"
#include "polyknot/projection.hpp"

namespace polyknot {
namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

LaurentPolynomial parse_jones(std::initializer_list<std::pair<int, LaurentPolynomial::Coefficient>> terms) {
  return LaurentPolynomial(terms);
}

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d) {
  const std::size_t c = d.crossing_count();
  if (c > kMaxBracketCrossings) {
    throw Error(ErrorKind::TooManyCrossings, "state sum limited to " + std::to_string(kMaxBracketCrossings) + " crossings");
  }
  if (c == 0) return LaurentPolynomial(1);
  const auto pd = d.pd_code();
  const std::size_t labels = 2 * c;

  // count[(a - b, loops)] over all states.
  std::map<std::pair<int, int>, LaurentPolynomial::Coefficient> count;
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    DisjointSets sets(labels + 1);
    int components = static_cast<int>(labels);
    int balance = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const auto& x = pd[i];
      if ((state >> i) & 1u) {
        // B-smoothing joins (a,d) and (b,c).
        balance -= 1;
        components -= sets.unite(x[0], x[3]);
        components -= sets.unite(x[1], x[2]);
      } else {
        balance += 1;
        components -= sets.unite(x[0], x[1]);
        components -= sets.unite(x[2], x[3]);
      }
    }
    ++count[{balance, components}];
  }
  const LaurentPolynomial loop{{2, -1}, {-2, -1}};
  LaurentPolynomial result;
  for (const auto& [key, n] : count) {
    const auto [balance, loops] = key;
    result += LaurentPolynomial::monomial(balance, n) * loop.pow(static_cast<unsigned>(loops - 1));
  }
  return result;
}

LaurentPolynomial jones(const Diagram& d) {
  const int w = d.writhe();
  const LaurentPolynomial framing = LaurentPolynomial::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return (framing * kauffman_bracket(d)).rescaled(-4);
}

std::int64_t determinant(const Diagram& d) {
  const auto v = jones(d).evaluate(-1);
  return v < 0 ? -v : v;
}

const std::vector<KnotTableEntry>& knot_table() {
  static const std::vector<KnotTableEntry> table = [] {
    const LaurentPolynomial right_trefoil = parse_jones({{1, 1}, {3, 1}, {4, -1}});
    struct Seed {
      const char* name;
      const char* description;
      LaurentPolynomial v;
      bool amphichiral;
    };
    const std::vector<Seed> seeds = {
        {"unknot", "unknot", LaurentPolynomial(1), true},
        {"3_1", "right-handed trefoil", right_trefoil, false},
        {"4_1", "figure-eight", parse_jones({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}), true},
        {"5_1", "(2,5)-torus knot", parse_jones({{2, 1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}), false},
        {"5_2", "three-twist knot", parse_jones({{1, 1}, {2, -1}, {3, 2}, {4, -1}, {5, 1}, {6, -1}}), false},
        {"6_1", "stevedore", parse_jones({{-2, 1}, {-1, -1}, {0, 2}, {1, -2}, {2, 1}, {3, -1}, {4, 1}}), false},
        {"6_2", "6_2", parse_jones({{-1, 1}, {0, -1}, {1, 2}, {2, -2}, {3, 2}, {4, -2}, {5, 1}}), false},
        {"6_3", "6_3", parse_jones({{-3, -1}, {-2, 2}, {-1, -2}, {0, 3}, {1, -2}, {2, 2}, {3, -1}}), true},
        {"3_1#3_1", "granny knot", right_trefoil * right_trefoil, false},
        {"3_1#-3_1", "square knot", right_trefoil * right_trefoil.mirrored(), true},
        {"8_19", "(3,4)-torus knot", parse_jones({{3, 1}, {5, 1}, {8, -1}}), false},
        {"8_20", "8_20", parse_jones({{-1, -1}, {0, 2}, {1, -1}, {2, 2}, {3, -1}, {4, 1}, {5, -1}}), false},
    };
    std::vector<KnotTableEntry> out;
    for (const Seed& s : seeds) {
      const auto det = [](const LaurentPolynomial& v) {
        const auto x = v.evaluate(-1);
        return x < 0 ? -x : x;
      };
      out.push_back({KnotType{s.name}, s.description, s.v, det(s.v)});
      if (!s.amphichiral) {
        out.push_back({KnotType{std::string("-") + s.name}, std::string("mirror of ") + s.description,
                       s.v.mirrored(), det(s.v)});
      }
    }
    return out;
  }();
  return table;
}

Identification identify(const Diagram& d) {
  Identification id;
  id.jones = jones(d);
  id.determinant = determinant(d);
  id.crossings = d.crossing_count();
  id.writhe = d.writhe();
  for (const auto& e : knot_table()) {
    if (e.jones == id.jones && e.determinant == id.determinant) {
      id.type = e.type;
      break;
    }
  }
  return id;
}

KnotType mirror_type(const KnotType& k) {
  if (!k.known()) return k;
  for (const auto& e : knot_table()) {
    if (e.type == k) {
      const auto mirrored = e.jones.mirrored();
      for (const auto& f : knot_table()) {
        if (f.jones == mirrored) return f.type;
      }
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown knot name " + k.name);
}

Identification identify_polygon(const Polygon& p, const Tolerance& tol) {
  return identify(project_radial(p, tol));
}

}  // namespace polyknot
