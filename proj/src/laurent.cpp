#include "rmb/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rmb {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::exponents_divided(int d) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e % d != 0) throw std::domain_error("exponent not divisible");
    r.terms_.emplace(e / d, c);
  }
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dlead = divisor.max_exponent();
  const BigInt& dcoef = divisor.terms_.rbegin()->second;
  const int dlow = divisor.min_exponent();
  while (!rem.is_zero()) {
    const int e = rem.max_exponent();
    const BigInt c = rem.terms_.rbegin()->second;
    if (e - rem.min_exponent() < dlead - dlow)
      throw std::domain_error("polynomial division is not exact");
    if (c % dcoef != 0) throw std::domain_error("polynomial division is not exact");
    LaurentPoly term = LaurentPoly::monomial(c / dcoef, e - dlead);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

std::pair<BigInt, BigInt> LaurentPoly::eval_at_i() const {
  BigInt re = 0, im = 0;
  for (const auto& [e, c] : terms_) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  return {re, im};
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    if (ia->second != ib->second)
      return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
  return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string LaurentPoly::to_string(const std::string& var, int denominator) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    int g = std::gcd(e, denominator);
    int num = e / g, den = denominator / g;
    if (den < 0) { den = -den; num = -num; }
    if (den == 1) {
      if (num != 1) out << "^" << num;
    } else {
      out << "^(" << num << "/" << den << ")";
    }
  }
  return out.str();
}

}  // namespace rmb
