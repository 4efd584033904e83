#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsfam/rational.hpp"

namespace fsfam {

std::uint32_t euler_phi(std::uint32_t n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Obtained by exact division of x^n - 1 by Phi_d for every proper divisor d.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

/// An element of Q(zeta_n), stored in the power basis 1, zeta, ..., zeta^(phi(n)-1)
/// modulo Phi_n. The representation is canonical for a fixed n.
///
/// Binary operations on values of different orders first lift both operands
/// into Q(zeta_lcm). Equality compares in the common field, so a rational
/// stored with order 7 equals the same rational stored with order 1.
class Cyclotomic {
 public:
  /// Zero, as a rational (n = 1).
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(Rational value) : order_(1), coeffs_{value} {}  // NOLINT: implicit by intent
  Cyclotomic(std::int64_t value) : Cyclotomic(Rational(value)) {}  // NOLINT
  /// `coeffs` must have exactly phi(n) entries.
  Cyclotomic(std::uint32_t n, std::vector<Rational> coeffs);

  /// zeta_n^k for any integer k.
  static Cyclotomic root(std::uint32_t n, std::int64_t k);
  /// sum_k counts[k] * zeta_n^k, with counts indexed by exponent (any length).
  static Cyclotomic from_root_counts(std::uint32_t n, std::span<const std::int64_t> counts);

  std::uint32_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  /// Same value in Q(zeta_m); m must be a multiple of order().
  Cyclotomic lift(std::uint32_t m) const;
  /// The value with order 1 when it is rational, unchanged otherwise.
  Cyclotomic normalized() const;

  /// Complex conjugation, zeta -> zeta^(n-1).
  Cyclotomic conj() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  Cyclotomic& operator/=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable sum of powers, e.g. "-1 - E(3)" or "2/3 + E(5)^2".
  std::string to_string() const;

 private:
  void reduce_from(std::vector<Rational> by_exponent);

  std::uint32_t order_;
  std::vector<Rational> coeffs_;
};

/// cyc_mul, cyc_conj and cyc_as_rational under their operation names.
inline Cyclotomic cyc_root(std::uint32_t n, std::int64_t k) { return Cyclotomic::root(n, k); }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_conj(const Cyclotomic& a) { return a.conj(); }
inline std::optional<Rational> cyc_as_rational(const Cyclotomic& a) { return a.as_rational(); }

}  // namespace fsfam
