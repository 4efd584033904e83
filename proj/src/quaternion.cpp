#include <algorithm>

#include <fmt/format.h>

#include "fsfam/errors.hpp"
#include "fsfam/group.hpp"

namespace fsfam {

namespace {

std::array<Mat2, QuaternionSubgroup::kOrder> listed_elements(const Mat2& x, const Mat2& y) {
  const Mat2 z = x * x;
  const Mat2 xy = x * y;
  return {Mat2::identity(x.modulus()), z, x, z * x, y, z * y, xy, z * xy};
}

Mat2 mat_pow(const Mat2& m, int k) {
  Mat2 r = Mat2::identity(m.modulus());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

QuaternionSubgroup::QuaternionSubgroup(Mat2 x, Mat2 y, std::array<Mat2, kOrder> elements)
    : x_(std::move(x)), y_(std::move(y)), elements_(std::move(elements)) {
  const std::uint32_t p = x_.modulus();
  const Mat2 id = Mat2::identity(p);
  const Mat2 z = elements_[1];

  ensure(mat_pow(x_, 4) == id, "Q8 relation X^4 = I fails");
  ensure(x_ * x_ == z && y_ * y_ == z, "Q8 relation X^2 = Y^2 = z fails");
  ensure(y_ * x_ * y_.inverse() == x_.inverse(), "Q8 relation Y X Y^-1 = X^-1 fails");
  ensure(z == -id && z != id, "the involution of Q must be -I");
  for (std::size_t i = 0; i < kOrder; ++i) {
    ensure(elements_[i].det() == FpScalar(1, p), "quaternion element with det != 1");
    for (std::size_t j = 0; j < i; ++j) {
      ensure(elements_[i] != elements_[j], "quaternion elements are not distinct");
    }
  }
  std::size_t involutions = 0;
  for (std::size_t i = 0; i < kOrder; ++i) {
    const Mat2& m = elements_[i];
    if (m != id && m * m == id) {
      ++involutions;
      ensure(m == z, "an involution other than -I");
    }
    for (std::size_t j = 0; j < kOrder; ++j) {
      const auto k = index_of(m * elements_[j]);
      ensure(k.has_value(), "quaternion subgroup is not closed");
      mul_[i][j] = *k;
      if (*k == 0) inv_[i] = j;
    }
  }
  ensure(involutions == 1, "Q must have exactly one involution");
}

QuaternionSubgroup QuaternionSubgroup::canonical(std::uint32_t p) {
  require_odd_prime(p, UINT32_MAX);
  const Mat2 x = Mat2::from_ints(p, 0, -1, 1, 0);
  const std::int64_t minus_one = p - 1;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      if ((a * a + b * b) % p == minus_one) {
        return from_generators(x, Mat2::from_ints(p, a, b, b, -a));
      }
    }
  }
  throw InvariantViolation(fmt::format("no solution of a^2 + b^2 = -1 mod {}", p));
}

QuaternionSubgroup QuaternionSubgroup::from_generators(const Mat2& x, const Mat2& y) {
  if (x.modulus() != y.modulus()) {
    throw InvariantViolation("quaternion generators over different fields");
  }
  return QuaternionSubgroup(x, y, listed_elements(x, y));
}

QuaternionSubgroup QuaternionSubgroup::conjugated(const Mat2& t) const {
  const Mat2 ti = t.inverse();
  return from_generators(t * x_ * ti, t * y_ * ti);
}

std::optional<std::size_t> QuaternionSubgroup::index_of(const Mat2& m) const {
  for (std::size_t i = 0; i < kOrder; ++i) {
    if (elements_[i] == m) return i;
  }
  return std::nullopt;
}

bool QuaternionSubgroup::same_subgroup(const QuaternionSubgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](const Mat2& m) { return index_of(m).has_value(); });
}

std::optional<QuaternionSubgroup> alternative_quaternion_subgroup(std::uint32_t p) {
  const QuaternionSubgroup q = QuaternionSubgroup::canonical(p);
  for (std::int64_t k = 1; k < p; ++k) {
    for (const Mat2& t : {Mat2::from_ints(p, 1, k, 0, 1), Mat2::from_ints(p, 1, 0, k, 1)}) {
      QuaternionSubgroup alt = q.conjugated(t);
      if (!alt.same_subgroup(q)) return alt;
    }
  }
  return std::nullopt;
}

}  // namespace fsfam
