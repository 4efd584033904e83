#include "fsfam/theorem.hpp"

#include <chrono>

#include <fmt/format.h>

#include "fsfam/errors.hpp"

namespace fsfam {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

bool diagonal_matches(const RationalMatrix& m, const std::vector<Rational>& diagonal) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != (i == j ? diagonal[i] : Rational(0))) return false;
    }
  }
  return true;
}

}  // namespace

TableChecks check_table(const CharacterTable& table) {
  const ClassTable& ct = table.classes();
  const SemidirectGroup& g = ct.group();
  TableChecks c;

  c.first_orthogonality =
      diagonal_matches(table.gram(), std::vector<Rational>(table.size(), 1));
  std::vector<Rational> centralizers;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    centralizers.emplace_back(static_cast<std::int64_t>(ct.centralizer_order(k)));
  }
  c.second_orthogonality = diagonal_matches(second_orthogonality(table), centralizers);

  std::int64_t squares = 0;
  for (const auto& row : table.rows()) {
    squares += row.degree * row.degree;
    c.indicator_degree_sum += row.indicator * row.degree;
  }
  c.degree_sum = squares == static_cast<std::int64_t>(ct.group_order());
  c.involution_count = static_cast<std::int64_t>(count_square_roots_of_identity(ct));
  const std::int64_t p = ct.prime();
  c.sum_rule = c.indicator_degree_sum == c.involution_count && c.involution_count == 1 + p * p;

  // {g : g^2 in V} against H = V<z>: matrix part I or z.
  bool locus_is_h = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    const bool square_in_v = g.in_v(g.mul(e, e));
    const bool in_h = g.q_index(e) <= 1;
    if (square_in_v) ++c.square_locus_size;
    if (square_in_v != in_h) locus_is_h = false;
  }
  c.square_locus = locus_is_h && c.square_locus_size == 2 * g.v_order();
  return c;
}

CharLabel default_label(std::uint32_t p) { return CharLabel::of(p, 0, 1); }

Report verify_theorem_a(const CharacterTable& table, const TableChecks& checks,
                        const CharLabel& label) {
  const auto start = std::chrono::steady_clock::now();
  const ClassTable& ct = table.classes();
  const SemidirectGroup& g = ct.group();
  if (label.a.modulus() != ct.prime()) {
    throw UsageError("label and group are over different primes");
  }
  if (label.is_trivial()) {
    throw UsageError("label must be nontrivial");
  }

  Report r;
  r.prime = ct.prime();
  r.label = label;
  r.group_order = ct.group_order();
  r.class_count = ct.size();
  for (const auto& row : table.rows()) {
    r.row_names.push_back(row.name);
    r.degrees.push_back(row.degree);
    r.indicators.push_back(row.indicator);
  }
  r.checks = checks;

  r.stabilizer_order = stabilizer_in_q(g.quaternion(), label).size();

  const ClassFunction chi = induce_from_v(label, ct);
  const auto row = table.find(chi);
  ensure(row.has_value(), fmt::format("lambda^G for {} is not a row of the table", label.to_string()));
  r.chi_row = table.row(*row).name;
  r.chi_norm = inner_product(ct, chi, chi);

  r.vanishes_off_v = true;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    if (!ct.in_v(k) && !chi[k].is_zero()) r.vanishes_off_v = false;
  }

  r.nu2 = fs_indicator(ct, chi);
  r.nu2_direct = fs_indicator_direct(ct, chi);

  // Split |G| nu2 into the contribution of the coset Vz (every element squares
  // to 1) and of V itself (v -> v^2 is a bijection of V).
  const auto degree = chi[0].as_rational();
  ensure(degree.has_value(), "chi(1) is not rational");
  const auto v_order = static_cast<std::int64_t>(g.v_order());
  r.coset_term = v_order * degree->num();
  Cyclotomic v_sum;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    if (ct.in_v(k)) v_sum += chi[k] * Rational(static_cast<std::int64_t>(ct.class_size(k)));
  }
  const auto v_sum_q = v_sum.as_rational();
  ensure(v_sum_q.has_value(), "[chi_V, 1_V] is not rational");
  r.restriction_inner = *v_sum_q / Rational(v_order);
  r.restriction_term = r.restriction_inner * Rational(v_order);
  ensure(Rational(r.coset_term) + r.restriction_term ==
             Rational(r.nu2) * Rational(static_cast<std::int64_t>(r.group_order)),
         "indicator breakdown does not add up");

  r.chi_square = tensor_square_decompose(table, *row);
  r.psi_multiplicity = r.chi_square[CharacterTable::kPsiRow].multiplicity;
  r.trivial_multiplicity = r.chi_square[CharacterTable::kTrivialRow].multiplicity;
  r.psi_indicator = table.row(CharacterTable::kPsiRow).indicator;
  ensure(table.row(CharacterTable::kPsiRow).degree == 2, "psi row does not have degree 2");

  r.verify_ms = elapsed_ms(start);
  return r;
}

Report verify_theorem_a(std::int64_t p, std::optional<std::pair<std::int64_t, std::int64_t>> label,
                        const VerifyOptions& options) {
  require_odd_prime(p);
  const auto prime = static_cast<std::uint32_t>(p);
  const CharLabel l =
      label ? CharLabel::of(prime, label->first, label->second) : default_label(prime);
  if (l.is_trivial()) {
    throw UsageError("label must be nontrivial");
  }

  const auto start = std::chrono::steady_clock::now();
  const CharacterTable table = character_table(prime);
  const TableChecks checks = check_table(table);
  const double table_ms = elapsed_ms(start);

  Report r = verify_theorem_a(table, checks, l);
  r.table_ms = table_ms;

  if (options.alternative_subgroup) {
    AlternativeSubgroupResult alt;
    if (auto q = alternative_quaternion_subgroup(prime)) {
      alt.available = true;
      alt.generators = fmt::format("X={},Y={}", q->x().to_string(), q->y().to_string());
      const CharacterTable alt_table = character_table(*q);
      const Report alt_report = verify_theorem_a(alt_table, check_table(alt_table), l);
      alt.pass = alt_report.pass() && alt_report.psi_multiplicity == r.psi_multiplicity;
    }
    r.alternative = alt;
  }
  return r;
}

}  // namespace fsfam
