#include "fsfam/finite_field.hpp"

#include <tuple>
#include <utility>

#include <fmt/format.h>

#include "fsfam/errors.hpp"

namespace fsfam {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::int64_t p, std::uint32_t bound) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw UsageError(fmt::format("{} is not an odd prime", p));
  }
  if (p > static_cast<std::int64_t>(bound)) {
    throw UsageError(fmt::format("prime {} exceeds the bound {}", p, bound));
  }
}

FpScalar::FpScalar(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) {
    throw UsageError("modulus must be at least 2");
  }
  const std::int64_t m = modulus;
  value_ = static_cast<std::uint32_t>(((value % m) + m) % m);
}

FpScalar FpScalar::operator-() const { return FpScalar(-static_cast<std::int64_t>(value_), modulus_); }

namespace {
void same_modulus(FpScalar a, FpScalar b) {
  if (a.modulus() != b.modulus()) {
    throw InvariantViolation("F_p operands with different moduli");
  }
}
}  // namespace

FpScalar operator+(FpScalar a, FpScalar b) {
  same_modulus(a, b);
  return FpScalar(static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_);
}

FpScalar operator-(FpScalar a, FpScalar b) {
  same_modulus(a, b);
  return FpScalar(static_cast<std::int64_t>(a.value_) - b.value_, a.modulus_);
}

FpScalar operator*(FpScalar a, FpScalar b) {
  same_modulus(a, b);
  return FpScalar(static_cast<std::int64_t>(static_cast<std::uint64_t>(a.value_) * b.value_ %
                                            a.modulus_),
                  a.modulus_);
}

FpScalar fp_inv(FpScalar x) {
  if (x.is_zero()) {
    throw ArithmeticError(fmt::format("0 has no inverse modulo {}", x.modulus()));
  }
  std::int64_t r0 = x.modulus(), r1 = x.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) {
    throw ArithmeticError(fmt::format("{} is not invertible modulo {}", x.value(), x.modulus()));
  }
  return FpScalar(t0, x.modulus());
}

Mat2::Mat2(FpScalar a, FpScalar b, FpScalar c, FpScalar d) : a_(a), b_(b), c_(c), d_(d) {
  if (a.modulus() != b.modulus() || a.modulus() != c.modulus() || a.modulus() != d.modulus()) {
    throw InvariantViolation("matrix entries with different moduli");
  }
}

Mat2 Mat2::from_ints(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t d) {
  return Mat2(FpScalar(a, p), FpScalar(b, p), FpScalar(c, p), FpScalar(d, p));
}

Mat2 Mat2::identity(std::uint32_t p) { return from_ints(p, 1, 0, 0, 1); }

FpScalar Mat2::det() const { return a_ * d_ - b_ * c_; }

Mat2 Mat2::inverse() const {
  const FpScalar s = fp_inv(det());
  return Mat2(s * d_, -(s * b_), -(s * c_), s * a_);
}

Mat2 Mat2::transpose() const { return Mat2(a_, c_, b_, d_); }

Mat2 Mat2::operator-() const { return Mat2(-a_, -b_, -c_, -d_); }

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return Mat2(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
              l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
}

FpVec2 operator*(const Mat2& m, const FpVec2& v) {
  return {m.a_ * v.x + m.b_ * v.y, m.c_ * v.x + m.d_ * v.y};
}

std::array<std::uint32_t, 4> Mat2::entries() const {
  return {a_.value(), b_.value(), c_.value(), d_.value()};
}

std::string Mat2::to_string() const {
  return fmt::format("[[{},{}],[{},{}]]", a_.value(), b_.value(), c_.value(), d_.value());
}

}  // namespace fsfam
