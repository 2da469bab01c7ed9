#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace polyknot {

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so equality is structural.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  /// Constant polynomial.
  explicit LaurentPolynomial(Coefficient c);
  /// {{exponent, coefficient}, ...}; repeated exponents are summed.
  LaurentPolynomial(std::initializer_list<std::pair<int, Coefficient>> terms);

  static LaurentPolynomial monomial(int exponent, Coefficient c = 1);

  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial pow(unsigned k) const;
  bool operator==(const LaurentPolynomial&) const = default;

  /// Multiplies by var^k.
  LaurentPolynomial shifted(int k) const;
  /// Replaces var by var^-1.
  LaurentPolynomial mirrored() const;
  /// Replaces var^e by var^(e / divisor); throws Error(InvalidArgument) if
  /// some exponent is not divisible.
  LaurentPolynomial rescaled(int divisor) const;

  /// Exact value at an integer point; only +1 and -1 are supported when
  /// negative exponents are present.
  Coefficient evaluate(int x) const;

  /// Human-readable form such as "-t^-4 + t^-3 + t^-1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(int exponent, Coefficient c);
  std::map<int, Coefficient> terms_;
};

}  // namespace polyknot
