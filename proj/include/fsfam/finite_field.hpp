#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace fsfam {

/// Default upper bound on the primes the pipeline accepts.
inline constexpr std::uint32_t kDefaultPrimeBound = 97;

bool is_prime(std::uint64_t n);

/// Throws UsageError unless p is an odd prime not exceeding `bound`.
void require_odd_prime(std::int64_t p, std::uint32_t bound = kDefaultPrimeBound);

/// Residue modulo an odd prime.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FpScalar operator-() const;
  friend FpScalar operator+(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a, FpScalar b);
  friend FpScalar operator*(FpScalar a, FpScalar b);

  friend bool operator==(const FpScalar&, const FpScalar&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Multiplicative inverse via the extended Euclidean algorithm.
/// Throws ArithmeticError on zero.
FpScalar fp_inv(FpScalar x);

/// Column vector in F_p^2; elements of the natural module V.
struct FpVec2 {
  FpScalar x;
  FpScalar y;

  friend FpVec2 operator+(const FpVec2& a, const FpVec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend FpVec2 operator-(const FpVec2& a) { return {-a.x, -a.y}; }
  friend bool operator==(const FpVec2&, const FpVec2&) = default;

  static FpVec2 zero(std::uint32_t p) { return {FpScalar(0, p), FpScalar(0, p)}; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

/// 2x2 matrix [[a, b], [c, d]] over F_p.
class Mat2 {
 public:
  Mat2(FpScalar a, FpScalar b, FpScalar c, FpScalar d);
  /// Entries given as integers, reduced modulo p.
  static Mat2 from_ints(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t d);
  static Mat2 identity(std::uint32_t p);

  FpScalar a() const { return a_; }
  FpScalar b() const { return b_; }
  FpScalar c() const { return c_; }
  FpScalar d() const { return d_; }
  std::uint32_t modulus() const { return a_.modulus(); }

  FpScalar det() const;
  Mat2 inverse() const;
  Mat2 transpose() const;
  Mat2 operator-() const;

  friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
  friend FpVec2 operator*(const Mat2& m, const FpVec2& v);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// (a, b, c, d) as residues; orders matrices lexicographically.
  std::array<std::uint32_t, 4> entries() const;
  std::string to_string() const;

 private:
  FpScalar a_, b_, c_, d_;
};

}  // namespace fsfam
