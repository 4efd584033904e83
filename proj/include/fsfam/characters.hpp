#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fsfam/cyclotomic.hpp"
#include "fsfam/finite_field.hpp"
#include "fsfam/group.hpp"

namespace fsfam {

/// Label (a, b) of the linear character of V given by v -> zeta_p^(a v0 + b v1).
struct CharLabel {
  FpScalar a;
  FpScalar b;

  static CharLabel of(std::uint32_t p, std::int64_t a, std::int64_t b) {
    return {FpScalar(a, p), FpScalar(b, p)};
  }
  bool is_trivial() const { return a.is_zero() && b.is_zero(); }
  std::array<std::uint32_t, 2> pair() const { return {a.value(), b.value()}; }
  std::string to_string() const;

  friend bool operator==(const CharLabel&, const CharLabel&) = default;
  friend bool operator<(const CharLabel& l, const CharLabel& r) { return l.pair() < r.pair(); }
};

/// Label of lambda^M where lambda^M(v) = lambda(M^-1 v); labels move by (M^-1)^T.
CharLabel label_action(const Mat2& m, const CharLabel& label);

/// Elements of Q fixing the label.
std::vector<Mat2> stabilizer_in_q(const QuaternionSubgroup& q, const CharLabel& label);

/// The Q-orbit of a label, sorted lexicographically.
std::vector<CharLabel> label_orbit(const QuaternionSubgroup& q, const CharLabel& label);

/// Lexicographically minimal representative of every orbit of nontrivial labels.
/// Every orbit must have size 8; anything else is an InvariantViolation.
std::vector<CharLabel> label_orbits(const QuaternionSubgroup& q);

/// A row of the character table of Q8, on classes {1}, {z}, {±X}, {±Y}, {±XY}.
struct Q8Character {
  std::string name;
  std::array<std::int64_t, 5> values;
};

/// trivial, the three linear characters with kernels <X>, <Y>, <XY>, then psi.
std::array<Q8Character, 5> q8_character_table();

/// Indicator of a Q8 row: (1/8) sum over Q8 of theta(m^2).
std::int64_t q8_indicator(const Q8Character& theta);

/// Class-indexed values for some ClassTable of the prime.
struct ClassFunction {
  std::uint32_t prime = 0;
  std::vector<Cyclotomic> values;

  std::size_t size() const { return values.size(); }
  const Cyclotomic& operator[](std::size_t k) const { return values[k]; }

  ClassFunction conj() const;
  friend ClassFunction operator*(const ClassFunction& f, const ClassFunction& g);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// lambda^G via orbit sums on V, zero off V.
ClassFunction induce_from_v(const CharLabel& label, const ClassTable& ct);

/// lambda^G(g) = (1/|V|) sum_{x in G} lambda°(x g x^-1), with lambda° zero off V.
/// Costs |G| per class; used to cross-check induce_from_v.
ClassFunction induce_by_averaging(const CharLabel& label, const ClassTable& ct);

/// theta pulled back along G -> G/V = Q.
ClassFunction inflate_from_q(const Q8Character& theta, const ClassTable& ct);

/// (1/|G|) sum_K |K| f(K) conj(g(K)); throws InvariantViolation if not rational.
Rational inner_product(const ClassTable& ct, const ClassFunction& f, const ClassFunction& g);

/// (1/|G|) sum_K |K| chi(K^2), through the class square map.
std::int64_t fs_indicator(const ClassTable& ct, const ClassFunction& chi);

/// (1/|G|) sum_g chi(g^2), squaring every element of G.
std::int64_t fs_indicator_direct(const ClassTable& ct, const ClassFunction& chi);

}  // namespace fsfam
