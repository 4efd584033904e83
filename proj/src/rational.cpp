#include "fsfam/rational.hpp"

#include <numeric>

#include "fsfam/errors.hpp"

namespace fsfam {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticError("integer overflow in addition");
  }
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ArithmeticError("integer overflow in subtraction");
  }
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticError("integer overflow in multiplication");
  }
  return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw ArithmeticError("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = checked::neg(numerator);
    denominator = checked::neg(denominator);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked::add(num_, rhs.num_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t n = checked::add(checked::mul(num_, rhs.den_ / g),
                                      checked::mul(rhs.num_, den_ / g));
  *this = Rational(n, checked::mul(den_, rhs.den_ / g));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked::mul(num_, rhs.num_);
    return *this;
  }
  // Cross-cancel first so intermediate products stay small.
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t n = checked::mul(num_ / (g1 ? g1 : 1), rhs.num_ / (g2 ? g2 : 1));
  const std::int64_t d = checked::mul(den_ / (g2 ? g2 : 1), rhs.den_ / (g1 ? g1 : 1));
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw ArithmeticError("division by zero");
  }
  Rational inv;
  inv.num_ = rhs.den_;
  inv.den_ = rhs.num_;
  if (inv.den_ < 0) {
    inv.num_ = checked::neg(inv.num_);
    inv.den_ = checked::neg(inv.den_);
  }
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fsfam
