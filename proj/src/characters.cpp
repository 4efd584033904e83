#include "fsfam/characters.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "fsfam/errors.hpp"

namespace fsfam {

std::string CharLabel::to_string() const { return fmt::format("({},{})", a.value(), b.value()); }

CharLabel label_action(const Mat2& m, const CharLabel& label) {
  const FpVec2 moved = m.inverse().transpose() * FpVec2{label.a, label.b};
  return {moved.x, moved.y};
}

std::vector<Mat2> stabilizer_in_q(const QuaternionSubgroup& q, const CharLabel& label) {
  std::vector<Mat2> out;
  for (const Mat2& m : q.elements()) {
    if (label_action(m, label) == label) out.push_back(m);
  }
  return out;
}

std::vector<CharLabel> label_orbit(const QuaternionSubgroup& q, const CharLabel& label) {
  std::vector<CharLabel> orbit;
  for (const Mat2& m : q.elements()) orbit.push_back(label_action(m, label));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::vector<CharLabel> label_orbits(const QuaternionSubgroup& q) {
  const std::uint32_t p = q.prime();
  std::set<std::array<std::uint32_t, 2>> seen;
  std::vector<CharLabel> reps;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      const CharLabel l = CharLabel::of(p, a, b);
      if (l.is_trivial() || seen.contains(l.pair())) continue;
      const auto orbit = label_orbit(q, l);
      if (orbit.size() != QuaternionSubgroup::kOrder) {
        throw InvariantViolation(
            fmt::format("label {} has an orbit of size {}", l.to_string(), orbit.size()));
      }
      for (const auto& o : orbit) seen.insert(o.pair());
      reps.push_back(l);  // scan order makes l the orbit minimum
    }
  }
  ensure(reps.size() * 8 == static_cast<std::size_t>(p) * p - 1,
         "label orbits do not cover the nontrivial labels");
  return reps;
}

std::array<Q8Character, 5> q8_character_table() {
  return {{
      {"trivial", {1, 1, 1, 1, 1}},
      {"ker_X", {1, 1, 1, -1, -1}},
      {"ker_Y", {1, 1, -1, 1, -1}},
      {"ker_XY", {1, 1, -1, -1, 1}},
      {"psi", {2, -2, 0, 0, 0}},
  }};
}

std::int64_t q8_indicator(const Q8Character& theta) {
  // Q8 classes {1}, {z}, {±X}, {±Y}, {±XY}: sizes and class of the square.
  constexpr std::array<std::int64_t, 5> sizes = {1, 1, 2, 2, 2};
  constexpr std::array<std::size_t, 5> square = {0, 0, 1, 1, 1};
  std::int64_t total = 0;
  for (std::size_t k = 0; k < 5; ++k) total += sizes[k] * theta.values[square[k]];
  ensure(total % 8 == 0, "Q8 indicator is not an integer");
  return total / 8;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out{prime, {}};
  out.values.reserve(values.size());
  for (const auto& v : values) out.values.push_back(v.conj());
  return out;
}

ClassFunction operator*(const ClassFunction& f, const ClassFunction& g) {
  ensure(f.size() == g.size() && f.prime == g.prime, "class functions on different tables");
  ClassFunction out{f.prime, {}};
  out.values.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out.values.push_back((f[k] * g[k]).normalized());
  return out;
}

namespace {

void require_nontrivial(const CharLabel& label, const ClassTable& ct) {
  if (label.a.modulus() != ct.prime()) {
    throw UsageError("label and group are over different primes");
  }
  if (label.is_trivial()) {
    throw UsageError("label must be nontrivial");
  }
}

std::uint32_t pairing(const CharLabel& l, std::uint32_t v0, std::uint32_t v1) {
  const std::uint64_t p = l.a.modulus();
  return static_cast<std::uint32_t>((l.a.value() * std::uint64_t{v0} + l.b.value() * std::uint64_t{v1}) % p);
}

}  // namespace

ClassFunction induce_from_v(const CharLabel& label, const ClassTable& ct) {
  require_nontrivial(label, ct);
  const std::uint32_t p = ct.prime();
  const auto& g = ct.group();
  const auto orbit = label_orbit(g.quaternion(), label);
  ensure(orbit.size() == QuaternionSubgroup::kOrder, "induced from a label with nontrivial stabilizer");

  ClassFunction out{p, std::vector<Cyclotomic>(ct.size())};
  for (std::size_t k = 0; k < ct.size(); ++k) {
    if (!ct.in_v(k)) continue;
    const std::size_t r = ct.rep(k);
    std::vector<std::int64_t> counts(p, 0);
    for (const auto& l : orbit) ++counts[pairing(l, g.v0(r), g.v1(r))];
    out.values[k] = Cyclotomic::from_root_counts(p, counts).normalized();
  }
  return out;
}

ClassFunction induce_by_averaging(const CharLabel& label, const ClassTable& ct) {
  require_nontrivial(label, ct);
  const std::uint32_t p = ct.prime();
  const auto& g = ct.group();
  ClassFunction out{p, std::vector<Cyclotomic>(ct.size())};
  for (std::size_t k = 0; k < ct.size(); ++k) {
    std::vector<std::int64_t> counts(p, 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t c = g.conjugate(x, ct.rep(k));
      if (g.in_v(c)) ++counts[pairing(label, g.v0(c), g.v1(c))];
    }
    Cyclotomic sum = Cyclotomic::from_root_counts(p, counts);
    sum /= Rational(static_cast<std::int64_t>(g.v_order()));
    out.values[k] = sum.normalized();
  }
  return out;
}

ClassFunction inflate_from_q(const Q8Character& theta, const ClassTable& ct) {
  ClassFunction out{ct.prime(), {}};
  out.values.reserve(ct.size());
  for (std::size_t k = 0; k < ct.size(); ++k) {
    out.values.emplace_back(theta.values[ct.q8_class(k)]);
  }
  return out;
}

Rational inner_product(const ClassTable& ct, const ClassFunction& f, const ClassFunction& g) {
  ensure(f.size() == ct.size() && g.size() == ct.size(), "class function length mismatch");
  Cyclotomic sum;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    sum += f[k] * g[k].conj() * Rational(static_cast<std::int64_t>(ct.class_size(k)));
  }
  const auto q = sum.as_rational();
  if (!q) {
    throw InvariantViolation("inner product is not rational: " + sum.to_string());
  }
  return *q / Rational(static_cast<std::int64_t>(ct.group_order()));
}

namespace {

std::int64_t as_integer_indicator(const Cyclotomic& sum, std::size_t group_order,
                                  const char* method) {
  const auto q = sum.as_rational();
  if (!q) {
    throw InvariantViolation(fmt::format("{} indicator sum is not rational", method));
  }
  const Rational nu = *q / Rational(static_cast<std::int64_t>(group_order));
  if (!nu.is_integer()) {
    throw InvariantViolation(
        fmt::format("{} indicator {} is not an integer", method, nu.to_string()));
  }
  return nu.num();
}

}  // namespace

std::int64_t fs_indicator(const ClassTable& ct, const ClassFunction& chi) {
  ensure(chi.size() == ct.size(), "class function length mismatch");
  Cyclotomic sum;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    sum += chi[ct.square_class(k)] * Rational(static_cast<std::int64_t>(ct.class_size(k)));
  }
  return as_integer_indicator(sum, ct.group_order(), "class-formula");
}

std::int64_t fs_indicator_direct(const ClassTable& ct, const ClassFunction& chi) {
  ensure(chi.size() == ct.size(), "class function length mismatch");
  const auto& g = ct.group();
  // Tally squares per class first, then weight: same literal sum, fewer cyclotomic adds.
  std::vector<std::int64_t> hits(ct.size(), 0);
  for (std::size_t e = 0; e < g.order(); ++e) ++hits[ct.class_of(g.mul(e, e))];
  Cyclotomic sum;
  for (std::size_t k = 0; k < ct.size(); ++k) {
    if (hits[k] != 0) sum += chi[k] * Rational(hits[k]);
  }
  return as_integer_indicator(sum, ct.group_order(), "element-wise");
}

}  // namespace fsfam
