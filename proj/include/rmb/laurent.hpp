#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>

namespace rmb {

using BigInt = boost::multiprecision::cpp_int;

/// Single-variable Laurent polynomial with exact integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);
  static LaurentPoly monomial(BigInt coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^{-1}
  LaurentPoly inverted() const;
  /// Divide every exponent by `d`; throws if some exponent is not divisible.
  LaurentPoly exponents_divided(int d) const;
  /// Exact division; throws std::domain_error when `divisor` does not divide.
  LaurentPoly divided_exact(const LaurentPoly& divisor) const;

  /// Evaluate at x = i (imaginary unit); returns (real, imag).
  std::pair<BigInt, BigInt> eval_at_i() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Total order (by exponent/coefficient sequence); used for canonical picks.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// Renders with `var`; exponents are divided by `denominator` (e.g. 2 renders
  /// q^{1/2} powers as fractions).
  std::string to_string(const std::string& var = "x", int denominator = 1) const;

private:
  void add_term(int exponent, const BigInt& coeff);
  std::map<int, BigInt> terms_;
};

}  // namespace rmb
