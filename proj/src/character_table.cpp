#include "fsfam/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "fsfam/errors.hpp"

namespace fsfam {

namespace {

// A value of Z[zeta_p] as sparse terms c * zeta^e. The all-ones vector is zero in
// Z[x]/(x^p - 1) modulo Phi_p when p is prime, so subtracting the most common
// coefficient keeps the representation short for sums of a few roots.
using SparseValue = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::optional<SparseValue> to_sparse(const Cyclotomic& value, std::uint32_t p) {
  if (value.order() != 1 && value.order() != p) return std::nullopt;
  const Cyclotomic lifted = value.lift(p);
  std::vector<std::int64_t> dense(p, 0);
  for (std::size_t i = 0; i < lifted.coeffs().size(); ++i) {
    const Rational& c = lifted.coeffs()[i];
    if (!c.is_integer()) return std::nullopt;
    dense[i] = c.num();
  }
  std::unordered_map<std::int64_t, std::size_t> freq;
  std::int64_t mode = 0;
  std::size_t best = 0;
  for (std::int64_t c : dense) {
    const std::size_t n = ++freq[c];
    if (n > best || (n == best && c == 0)) {
      best = n;
      mode = c;
    }
  }
  SparseValue out;
  for (std::uint32_t e = 0; e < p; ++e) {
    if (dense[e] != mode) out.emplace_back(e, checked::sub(dense[e], mode));
  }
  return out;
}

std::optional<std::vector<SparseValue>> to_sparse(const ClassFunction& f, std::uint32_t p) {
  std::vector<SparseValue> out;
  out.reserve(f.size());
  for (const auto& v : f.values) {
    auto s = to_sparse(v, p);
    if (!s) return std::nullopt;
    out.push_back(std::move(*s));
  }
  return out;
}

// sum_k w_k f_k conj(g_k), as a rational; throws if the sum is not rational.
template <typename Acc>
Rational sparse_pairing(const std::vector<SparseValue>& f, const std::vector<SparseValue>& g,
                        const std::vector<std::int64_t>& weights, std::uint32_t p,
                        std::vector<Acc>& acc) {
  std::fill(acc.begin(), acc.end(), Acc{0});
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].empty() || g[k].empty()) continue;
    const Acc w = weights[k];
    for (const auto& [e1, c1] : f[k]) {
      const Acc wc1 = w * c1;
      for (const auto& [e2, c2] : g[k]) {
        const std::uint32_t d = e1 >= e2 ? e1 - e2 : e1 + p - e2;
        acc[d] += wc1 * c2;
      }
    }
  }
  // Over Q, the kernel of Q[x]/(x^p - 1) -> Q(zeta_p) is spanned by the all-ones
  // vector, so the sum is rational exactly when every non-constant slot agrees.
  for (std::uint32_t e = 2; e < p; ++e) {
    if (acc[e] != acc[1]) {
      throw InvariantViolation("inner product is not rational");
    }
  }
  const Acc value = acc[0] - acc[1];
  if constexpr (sizeof(Acc) > sizeof(std::int64_t)) {
    if (value > INT64_MAX || value < INT64_MIN) {
      throw ArithmeticError("inner product accumulator overflow");
    }
  }
  return Rational(static_cast<std::int64_t>(value));
}

// Upper bound on |w c1 c2| summed over all term pairs, as a double.
double magnitude_bound(const std::vector<std::optional<std::vector<SparseValue>>>& side,
                       const std::vector<std::int64_t>& weights) {
  double worst = 0;
  for (const auto& f : side) {
    if (!f) continue;
    double total = 0;
    for (std::size_t k = 0; k < f->size(); ++k) {
      double mass = 0;
      for (const auto& term : (*f)[k]) mass += std::abs(static_cast<double>(term.second));
      total += static_cast<double>(std::abs(weights[k])) * mass * mass;
    }
    worst = std::max(worst, total);
  }
  return worst;
}

RationalMatrix pairing_matrix(const std::vector<ClassFunction>& lhs,
                              const std::vector<ClassFunction>& rhs,
                              const std::vector<std::int64_t>& weights, std::uint32_t p,
                              std::int64_t denominator) {
  RationalMatrix out(lhs.size(), std::vector<Rational>(rhs.size()));
  std::vector<std::optional<std::vector<SparseValue>>> ls, rs;
  for (const auto& f : lhs) ls.push_back(to_sparse(f, p));
  for (const auto& g : rhs) rs.push_back(to_sparse(g, p));
  // sum |w c1 c2| <= sqrt(A) sqrt(B) by Cauchy-Schwarz over the two sides.
  const double bound = std::sqrt(magnitude_bound(ls, weights)) *
                       std::sqrt(magnitude_bound(rs, weights));
  const bool narrow = bound < 0x1p61;
  std::vector<std::int64_t> acc64(p);
  std::vector<__int128> acc128(p);
  const bool symmetric = &lhs == &rhs;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = symmetric ? i : 0; j < rhs.size(); ++j) {
      Rational value;
      if (ls[i] && rs[j]) {
        value = narrow ? sparse_pairing(*ls[i], *rs[j], weights, p, acc64)
                       : sparse_pairing(*ls[i], *rs[j], weights, p, acc128);
      } else {
        Cyclotomic sum;
        for (std::size_t k = 0; k < weights.size(); ++k) {
          sum += lhs[i][k] * rhs[j][k].conj() * Rational(weights[k]);
        }
        const auto q = sum.as_rational();
        if (!q) throw InvariantViolation("inner product is not rational: " + sum.to_string());
        value = *q;
      }
      out[i][j] = value / Rational(denominator);
      // The pairing is Hermitian and its values are rational.
      if (symmetric) out[j][i] = out[i][j];
    }
  }
  return out;
}

bool is_identity(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

RationalMatrix inner_product_matrix(const ClassTable& ct, const std::vector<ClassFunction>& lhs,
                                    const std::vector<ClassFunction>& rhs) {
  std::vector<std::int64_t> weights(ct.size());
  for (std::size_t k = 0; k < ct.size(); ++k) {
    weights[k] = static_cast<std::int64_t>(ct.class_size(k));
  }
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& f : *side) ensure(f.size() == ct.size(), "class function length mismatch");
  }
  return pairing_matrix(lhs, rhs, weights, ct.prime(),
                        static_cast<std::int64_t>(ct.group_order()));
}

CharacterTable::CharacterTable(ClassTable classes) : classes_(std::move(classes)) {
  const ClassTable& ct = classes_;
  for (const auto& theta : q8_character_table()) {
    CharacterRow row;
    row.name = theta.name;
    row.values = inflate_from_q(theta, ct);
    rows_.push_back(std::move(row));
  }
  for (const auto& label : label_orbits(ct.group().quaternion())) {
    CharacterRow row;
    row.name = fmt::format("chi_{}_{}", label.a.value(), label.b.value());
    row.values = induce_from_v(label, ct);
    row.label = label;
    rows_.push_back(std::move(row));
  }

  ensure(rows_.size() == ct.size(),
         fmt::format("{} characters for {} classes", rows_.size(), ct.size()));
  std::int64_t degree_squares = 0;
  for (auto& row : rows_) {
    const auto d = row.values[0].as_rational();
    ensure(d && d->is_integer() && d->num() > 0, "degree is not a positive integer");
    row.degree = d->num();
    degree_squares = checked::add(degree_squares, checked::mul(row.degree, row.degree));
  }
  ensure(degree_squares == static_cast<std::int64_t>(ct.group_order()),
         "sum of squared degrees differs from |G|");
  gram_ = first_orthogonality(*this);
  ensure(is_identity(gram_), "character table rows are not orthonormal");

  for (auto& row : rows_) {
    row.indicator = fs_indicator(ct, row.values);
    ensure(row.indicator >= -1 && row.indicator <= 1, "indicator outside {-1, 0, 1}");
  }
}

std::optional<std::size_t> CharacterTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].values == f) return i;
  }
  return std::nullopt;
}

CharacterTable character_table(std::uint32_t p) {
  require_odd_prime(p);
  return character_table(QuaternionSubgroup::canonical(p));
}

CharacterTable character_table(const QuaternionSubgroup& q) {
  return CharacterTable(ClassTable(SemidirectGroup(q)));
}

RationalMatrix first_orthogonality(const CharacterTable& table) {
  std::vector<ClassFunction> rows;
  for (const auto& r : table.rows()) rows.push_back(r.values);
  return inner_product_matrix(table.classes(), rows, rows);
}

RationalMatrix second_orthogonality(const CharacterTable& table) {
  const std::size_t n = table.classes().size();
  std::vector<ClassFunction> columns(n, ClassFunction{table.prime(), {}});
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& r : table.rows()) columns[k].values.push_back(r.values[k]);
  }
  const std::vector<std::int64_t> ones(table.size(), 1);
  return pairing_matrix(columns, columns, ones, table.prime(), 1);
}

std::vector<Multiplicity> decompose(const CharacterTable& table, const ClassFunction& f) {
  std::vector<ClassFunction> rows;
  for (const auto& r : table.rows()) rows.push_back(r.values);
  const RationalMatrix m = inner_product_matrix(table.classes(), {f}, rows);

  std::vector<Multiplicity> out;
  Rational weighted;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational& mult = m[0][i];
    if (!mult.is_integer() || mult < Rational(0)) {
      throw InvariantViolation(fmt::format("multiplicity of {} is {}", table.row(i).name,
                                           mult.to_string()));
    }
    out.push_back({table.row(i).name, table.row(i).degree, mult.num()});
    weighted += mult * Rational(table.row(i).degree);
  }
  const auto degree = f[0].as_rational();
  ensure(degree && weighted == *degree, "decomposition does not account for the degree");
  return out;
}

std::vector<Multiplicity> tensor_square_decompose(const CharacterTable& table, std::size_t row) {
  const ClassFunction& chi = table.row(row).values;
  return decompose(table, chi * chi);
}

}  // namespace fsfam
