#include "polyknot/laurent.hpp"

#include <cstdlib>

#include "polyknot/errors.hpp"

namespace polyknot {

LaurentPolynomial::LaurentPolynomial(Coefficient c) { add_term(0, c); }

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, Coefficient>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coefficient c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::rescaled(int divisor) const {
  if (divisor == 0) throw Error(ErrorKind::InvalidArgument, "division of exponents by zero");
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0) throw Error(ErrorKind::InvalidArgument, "exponent not divisible when rescaling");
    r.add_term(e / divisor, c);
  }
  return r;
}

LaurentPolynomial::Coefficient LaurentPolynomial::evaluate(int x) const {
  if (x != 1 && x != -1 && !terms_.empty() && terms_.begin()->first < 0) {
    throw Error(ErrorKind::InvalidArgument, "integer evaluation with negative exponents needs x = +-1");
  }
  Coefficient total = 0;
  for (const auto& [e, c] : terms_) {
    Coefficient power = 1;
    if (x == -1) {
      power = (std::abs(e) % 2 == 0) ? 1 : -1;
    } else if (x != 1) {
      for (int i = 0; i < e; ++i) power *= x;
    }
    total += c * power;
  }
  return total;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace polyknot
