#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fsfam/finite_field.hpp"

namespace fsfam {

// ---------------------------------------------------------------------------
// Quaternion subgroup of SL_2(p)
// ---------------------------------------------------------------------------

/// A quaternion group of order 8 inside SL_2(p), generated by X and Y.
///
/// Elements are stored in the fixed order I, z, X, zX, Y, zY, XY, zXY where
/// z = X^2 = -I. Q8 classes are numbered {1}, {z}, {±X}, {±Y}, {±XY}.
class QuaternionSubgroup {
 public:
  static constexpr std::size_t kOrder = 8;

  /// X = [[0,-1],[1,0]], Y = [[a,b],[b,-a]] for the lexicographically smallest
  /// (a, b) with a^2 + b^2 = -1 mod p.
  static QuaternionSubgroup canonical(std::uint32_t p);

  /// Validates the Q8 presentation and closure; throws InvariantViolation otherwise.
  static QuaternionSubgroup from_generators(const Mat2& x, const Mat2& y);

  /// t Q t^-1 with generators t X t^-1 and t Y t^-1.
  QuaternionSubgroup conjugated(const Mat2& t) const;

  std::uint32_t prime() const { return x_.modulus(); }
  const Mat2& x() const { return x_; }
  const Mat2& y() const { return y_; }
  const Mat2& z() const { return elements_[1]; }
  std::span<const Mat2, kOrder> elements() const { return elements_; }
  const Mat2& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const Mat2& m) const;
  std::size_t product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }

  static constexpr std::size_t q8_class(std::size_t element_index) {
    return element_index < 2 ? element_index : element_index / 2 + 1;
  }

  /// Same underlying set of matrices.
  bool same_subgroup(const QuaternionSubgroup& other) const;

 private:
  QuaternionSubgroup(Mat2 x, Mat2 y, std::array<Mat2, kOrder> elements);

  Mat2 x_, y_;
  std::array<Mat2, kOrder> elements_;
  std::array<std::array<std::size_t, kOrder>, kOrder> mul_{};
  std::array<std::size_t, kOrder> inv_{};
};

/// The canonical quaternion subgroup for p; see QuaternionSubgroup::canonical.
inline QuaternionSubgroup quaternion_subgroup(std::uint32_t p) {
  return QuaternionSubgroup::canonical(p);
}

/// A quaternion subgroup conjugate to, but different from, the canonical one,
/// found by conjugating with elementary unipotent matrices. Empty when the
/// canonical subgroup is normal in SL_2(p), which happens only for p = 3.
std::optional<QuaternionSubgroup> alternative_quaternion_subgroup(std::uint32_t p);

// ---------------------------------------------------------------------------
// Semidirect product G = V Q
// ---------------------------------------------------------------------------

/// (v, M) with v in V = F_p^2 and M in Q.
struct GroupElement {
  FpVec2 v;
  Mat2 m;

  /// (v0, v1, a, b, c, d); identifies the element uniquely.
  std::array<std::uint32_t, 6> encoding() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// (v1, M1)(v2, M2) = (v1 + M1 v2, M1 M2).
GroupElement semidirect_mul(const GroupElement& g, const GroupElement& h);
/// (v, M)^-1 = (-M^-1 v, M^-1).
GroupElement semidirect_inv(const GroupElement& g);

/// G = V ⋊ Q with every element indexed.
///
/// Index 0 is the identity; the remaining elements follow lexicographic
/// order of the canonical 6-tuple. Multiplication and inversion work on
/// indices through precomputed tables.
class SemidirectGroup {
 public:
  explicit SemidirectGroup(QuaternionSubgroup q);

  std::uint32_t prime() const { return p_; }
  std::size_t order() const { return vq_.size(); }
  std::size_t v_order() const { return static_cast<std::size_t>(p_) * p_; }
  const QuaternionSubgroup& quaternion() const { return quat_; }

  GroupElement element(std::size_t i) const;
  std::vector<GroupElement> elements() const;
  std::size_t index_of(const GroupElement& g) const;
  /// Index of (v, element i of Q).
  std::size_t index_of(std::uint32_t v0, std::uint32_t v1, std::size_t q_index) const;

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const;
  /// g h g^-1
  std::size_t conjugate(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv(g)); }
  std::size_t power(std::size_t i, std::uint64_t k) const;

  std::uint32_t v0(std::size_t i) const { return v0_[i]; }
  std::uint32_t v1(std::size_t i) const { return v1_[i]; }
  std::size_t q_index(std::size_t i) const { return qidx_[i]; }
  bool in_v(std::size_t i) const { return qidx_[i] == 0; }

 private:
  std::size_t packed(std::uint32_t v0, std::uint32_t v1, std::size_t qi) const {
    return (static_cast<std::size_t>(v0) * p_ + v1) * QuaternionSubgroup::kOrder + qi;
  }

  std::uint32_t p_;
  QuaternionSubgroup quat_;
  std::vector<std::uint32_t> v0_, v1_;
  std::vector<std::uint8_t> qidx_;
  std::vector<std::size_t> vq_;  // packed (v, q) -> element index
  // Action of Q element q on packed vector w = w0 * p + w1.
  std::array<std::vector<std::uint32_t>, QuaternionSubgroup::kOrder> act_;
};

/// All 8p^2 elements for the canonical subgroup, identity first.
std::vector<GroupElement> enumerate_group(std::uint32_t p);

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

class ClassTable {
 public:
  /// Partition by conjugation-orbit closure under a generating set of G.
  /// Classes are ordered by their minimal element index, which is also the rep.
  explicit ClassTable(SemidirectGroup group);

  const SemidirectGroup& group() const { return group_; }
  std::uint32_t prime() const { return group_.prime(); }
  std::size_t group_order() const { return group_.order(); }
  std::size_t size() const { return reps_.size(); }

  std::size_t rep(std::size_t k) const { return reps_[k]; }
  std::size_t class_size(std::size_t k) const { return members_[k].size(); }
  std::size_t centralizer_order(std::size_t k) const { return group_order() / class_size(k); }
  std::span<const std::size_t> members(std::size_t k) const { return members_[k]; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  /// Class index of rep^2, verified for every member.
  std::size_t square_class(std::size_t k) const { return square_[k]; }
  std::span<const std::size_t> square_classes() const { return square_; }

  /// Class lies inside V.
  bool in_v(std::size_t k) const { return group_.in_v(reps_[k]); }
  /// Q8 class (0..4) of the matrix part; constant on every G-class.
  std::size_t q8_class(std::size_t k) const {
    return QuaternionSubgroup::q8_class(group_.q_index(reps_[k]));
  }

 private:
  SemidirectGroup group_;
  std::vector<std::size_t> reps_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> square_;
};

ClassTable conjugacy_classes(std::uint32_t p);

/// k-th power map on classes. Throws InvariantViolation if some member's
/// power lands in a different class than the representative's.
std::vector<std::size_t> power_map(const ClassTable& ct, std::uint64_t k);
inline std::vector<std::size_t> square_map(const ClassTable& ct) { return power_map(ct, 2); }

/// #{g in G : g^2 = 1}, counted element by element.
std::size_t count_square_roots_of_identity(const ClassTable& ct);

}  // namespace fsfam
