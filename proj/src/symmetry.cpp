#include "polyknot/symmetry.hpp"

#include <charconv>
#include <vector>

#include "polyknot/errors.hpp"

namespace polyknot {

Polygon reverse(const Polygon& p) {
  const std::size_t n = p.size();
  std::vector<Vec3> v;
  v.reserve(n);
  v.push_back(p[0]);
  for (std::size_t i = n - 1; i >= 1; --i) v.push_back(p[i]);
  return Polygon(std::move(v));
}

Polygon rotate_labels(const Polygon& p, std::size_t k) {
  const std::size_t n = p.size();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "rotation index must satisfy 0 <= k < n");
  std::vector<Vec3> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(p[(i + k) % n]);
  return Polygon(std::move(v));
}

Polygon mirror(const Polygon& p) {
  std::vector<Vec3> v;
  v.reserve(p.size());
  for (const Vec3& x : p.vertices()) v.emplace_back(x.x, x.y, 0.0 - x.z);  // no negative zeros in output
  return Polygon(std::move(v));
}

Polygon apply(const LabelAction& action, const Polygon& p) {
  struct Visitor {
    const Polygon& p;
    Polygon operator()(const Reverse&) const { return reverse(p); }
    Polygon operator()(const Rotate& r) const { return rotate_labels(p, r.k); }
    Polygon operator()(const Mirror&) const { return mirror(p); }
  };
  return std::visit(Visitor{p}, action);
}

LabelAction parse_label_action(const std::string& text) {
  if (text == "reverse") return Reverse{};
  if (text == "mirror") return Mirror{};
  const std::string prefix = "rotate:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t k = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && first != last) return Rotate{k};
  }
  throw Error(ErrorKind::ParseError, "unknown action '" + text + "' (expected reverse, mirror or rotate:k)");
}

}  // namespace polyknot
