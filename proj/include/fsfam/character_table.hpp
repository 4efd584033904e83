#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsfam/characters.hpp"
#include "fsfam/group.hpp"

namespace fsfam {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct CharacterRow {
  std::string name;
  ClassFunction values;
  std::int64_t degree = 0;
  std::int64_t indicator = 0;
  /// Set for rows induced from V; empty for the five inflations from Q.
  std::optional<CharLabel> label;
};

/// Irr(G) assembled from five inflations of Q8 and one induced character per
/// orbit of nontrivial labels.
///
/// Row order: trivial, ker_X, ker_Y, ker_XY, psi, then induced rows in
/// lexicographic order of their orbit representatives. Construction checks
/// row count, the degree-square sum and full orthonormality, then attaches
/// class-formula indicators.
class CharacterTable {
 public:
  explicit CharacterTable(ClassTable classes);

  const ClassTable& classes() const { return classes_; }
  std::uint32_t prime() const { return classes_.prime(); }
  std::size_t size() const { return rows_.size(); }
  const std::vector<CharacterRow>& rows() const { return rows_; }
  const CharacterRow& row(std::size_t i) const { return rows_.at(i); }

  /// <row_i, row_j> as computed (and checked to be the identity) during construction.
  const RationalMatrix& gram() const { return gram_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Row equal to the class function, if any.
  std::optional<std::size_t> find(const ClassFunction& f) const;
  static constexpr std::size_t kTrivialRow = 0;
  static constexpr std::size_t kPsiRow = 4;

 private:
  ClassTable classes_;
  std::vector<CharacterRow> rows_;
  RationalMatrix gram_;
};

CharacterTable character_table(std::uint32_t p);
CharacterTable character_table(const QuaternionSubgroup& q);

/// Entry (i, j) = <lhs_i, rhs_j>. Integer-valued inputs in Q(zeta_p) take a
/// sparse route through Z[x]/(x^p - 1); anything else falls back to inner_product.
RationalMatrix inner_product_matrix(const ClassTable& ct, const std::vector<ClassFunction>& lhs,
                                    const std::vector<ClassFunction>& rhs);

/// <row_i, row_j> for every pair of rows.
RationalMatrix first_orthogonality(const CharacterTable& table);

/// sum over rows of chi(K) conj(chi(K')) for every pair of classes.
RationalMatrix second_orthogonality(const CharacterTable& table);

struct Multiplicity {
  std::string name;
  std::int64_t degree = 0;
  std::int64_t multiplicity = 0;
};

/// Multiplicities of every row in f. Each must be a non-negative integer and
/// the degree-weighted sum must equal f(1).
std::vector<Multiplicity> decompose(const CharacterTable& table, const ClassFunction& f);

/// decompose() applied to the pointwise square of a row.
std::vector<Multiplicity> tensor_square_decompose(const CharacterTable& table, std::size_t row);

}  // namespace fsfam
