#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsfam/character_table.hpp"

namespace fsfam {

/// Table-wide structural checks; computed once per table and shared by every
/// label verified against it.
struct TableChecks {
  bool first_orthogonality = false;
  bool second_orthogonality = false;
  bool degree_sum = false;
  std::int64_t indicator_degree_sum = 0;  // sum over rows of nu2 * degree
  std::int64_t involution_count = 0;      // #{g : g^2 = 1}, brute force
  bool sum_rule = false;
  std::size_t square_locus_size = 0;  // #{g : g^2 in V}
  bool square_locus = false;          // that set is exactly V<z>, of size 2p^2

  bool pass() const {
    return first_orthogonality && second_orthogonality && degree_sum && sum_rule && square_locus;
  }
};

TableChecks check_table(const CharacterTable& table);

/// Outcome of re-running the theorem checks with a different quaternion subgroup.
struct AlternativeSubgroupResult {
  bool available = false;
  std::string generators;  // "X=...,Y=..."
  bool pass = false;
};

struct Report {
  std::uint32_t prime = 0;
  CharLabel label = CharLabel::of(3, 0, 1);
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::vector<std::string> row_names;
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> indicators;

  std::string chi_row;
  std::size_t stabilizer_order = 0;
  Rational chi_norm;
  bool vanishes_off_v = false;

  std::int64_t nu2 = 0;         // class formula
  std::int64_t nu2_direct = 0;  // element-wise sum
  // nu2 * |G| = |V| chi(1) + |V| [chi_V, 1_V]
  std::int64_t coset_term = 0;
  Rational restriction_term;
  Rational restriction_inner;  // [chi_V, 1_V]

  std::vector<Multiplicity> chi_square;
  std::int64_t psi_multiplicity = 0;
  std::int64_t trivial_multiplicity = 0;
  std::int64_t psi_indicator = 0;

  TableChecks checks;
  std::optional<AlternativeSubgroupResult> alternative;

  double table_ms = 0.0;
  double verify_ms = 0.0;

  bool stabilizer_trivial() const { return stabilizer_order == 1; }
  bool irreducible() const { return chi_norm == Rational(1); }
  bool indicator_one() const { return nu2 == 1 && nu2_direct == 1; }
  bool contains_psi() const { return psi_multiplicity >= 1; }
  bool theorem_holds() const {
    return stabilizer_trivial() && irreducible() && indicator_one() && contains_psi() &&
           psi_indicator == -1;
  }
  bool pass() const {
    return theorem_holds() && checks.pass() && vanishes_off_v &&
           (!alternative || !alternative->available || alternative->pass);
  }
};

struct VerifyOptions {
  /// Repeat the theorem checks with a second, conjugate quaternion subgroup.
  bool alternative_subgroup = false;
};

/// Lexicographically smallest nontrivial label, (0, 1).
CharLabel default_label(std::uint32_t p);

/// Full pipeline for one prime. Throws UsageError on a bad prime or a trivial label.
Report verify_theorem_a(std::int64_t p,
                        std::optional<std::pair<std::int64_t, std::int64_t>> label = std::nullopt,
                        const VerifyOptions& options = {});

/// Checks for one label against an existing table and its precomputed checks.
Report verify_theorem_a(const CharacterTable& table, const TableChecks& checks,
                        const CharLabel& label);

}  // namespace fsfam
