#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "brute_force.hpp"
#include "fsfam/character_table.hpp"
#include "fsfam/characters.hpp"
#include "fsfam/errors.hpp"

using namespace fsfam;

namespace {

brute::Elem to_brute(const GroupElement& g) {
  const auto e = g.encoding();
  return {e[0], e[1], e[2], e[3], e[4], e[5]};
}

bool close(brute::Complex a, brute::Complex b) { return std::abs(a - b) < 1e-8; }

/// Class index by type, p = 3: identity, V minus 1, then the fibres over z, X, Y, XY.
struct P3Classes {
  std::size_t one, v, z, x, y, xy;
};

P3Classes p3_classes(const ClassTable& ct) {
  P3Classes c{};
  for (std::size_t k = 0; k < ct.size(); ++k) {
    switch (ct.q8_class(k)) {
      case 0: (k == 0 ? c.one : c.v) = k; break;
      case 1: c.z = k; break;
      case 2: c.x = k; break;
      case 3: c.y = k; break;
      default: c.xy = k; break;
    }
  }
  return c;
}

/// psi of Q8 through G -> Q, read from the matrix part: 2 at I, -2 at -I, 0 elsewhere.
double psi_numeric(const brute::Elem& g, long p) {
  if (g[2] == 1 && g[3] == 0 && g[4] == 0 && g[5] == 1) return 2;
  if (g[2] == p - 1 && g[3] == 0 && g[4] == 0 && g[5] == p - 1) return -2;
  return 0;
}

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("labels") {
  TEST_CASE("action examples") {
    const auto q = quaternion_subgroup(3);
    CHECK(label_action(Mat2::identity(3), CharLabel::of(3, 1, 2)) == CharLabel::of(3, 1, 2));
    CHECK(label_action(q.z(), CharLabel::of(3, 1, 0)) == CharLabel::of(3, 2, 0));
  }

  TEST_CASE("action is a group action") {
    const auto q = quaternion_subgroup(7);
    const auto l = CharLabel::of(7, 3, 5);
    for (const auto& m : q.elements())
      for (const auto& n : q.elements())
        CHECK(label_action(m * n, l) == label_action(m, label_action(n, l)));
  }

  TEST_CASE("stabilizers") {
    const auto q3 = quaternion_subgroup(3);
    CHECK(stabilizer_in_q(q3, CharLabel::of(3, 0, 0)).size() == 8);
    const auto s = stabilizer_in_q(q3, CharLabel::of(3, 1, 0));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Mat2::identity(3));
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto q = quaternion_subgroup(p);
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
          if (a == 0 && b == 0) continue;
          CHECK(stabilizer_in_q(q, CharLabel::of(p, a, b)).size() == 1);
          // Reference: M^T fixes no nonzero label unless M = I.
          for (const auto& m : brute::quaternion(p)) {
            if (m == brute::Mat{1, 0, 0, 1}) continue;
            const long a2 = brute::mod(m[0] * a + m[2] * b, p), b2 = brute::mod(m[1] * a + m[3] * b, p);
            CHECK_FALSE((a2 == a && b2 == b));
          }
        }
    }
  }

  TEST_CASE("orbit counts") {
    CHECK(label_orbits(quaternion_subgroup(3)).size() == 1);
    CHECK(label_orbits(quaternion_subgroup(5)).size() == 3);
    CHECK(label_orbits(quaternion_subgroup(7)).size() == 6);
    for (std::uint32_t p : {11u, 13u, 17u}) {
      const auto q = quaternion_subgroup(p);
      const auto reps = label_orbits(q);
      CHECK(reps.size() == (p * p - 1) / 8);
      std::set<CharLabel> seen;
      for (const auto& r : reps) {
        const auto orbit = label_orbit(q, r);
        CHECK(orbit.size() == 8);
        CHECK(orbit.front() == r);
        seen.insert(orbit.begin(), orbit.end());
      }
      CHECK(seen.size() == p * p - 1);
    }
  }
}

TEST_SUITE("Q8 table") {
  TEST_CASE("values and indicators") {
    const auto t = q8_character_table();
    CHECK(t[0].values == std::array<std::int64_t, 5>{1, 1, 1, 1, 1});
    CHECK(t[4].name == "psi");
    CHECK(t[4].values[1] == -2);
    CHECK(q8_indicator(t[4]) == -1);
    for (int i = 0; i < 4; ++i) CHECK(q8_indicator(t[i]) == 1);
    const std::array<std::int64_t, 5> sizes{1, 1, 2, 2, 2};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < 5; ++k) s += sizes[k] * t[i].values[k] * t[j].values[k];
        CHECK(s == (i == j ? 8 : 0));
      }
  }
}

TEST_SUITE("class functions") {
  TEST_CASE("induced values at p = 3") {
    const auto ct = conjugacy_classes(3);
    const auto c = p3_classes(ct);
    const auto chi = induce_from_v(CharLabel::of(3, 1, 0), ct);
    CHECK(chi[c.one] == Cyclotomic(8));
    CHECK(chi[c.v] == Cyclotomic(-1));
    for (auto k : {c.z, c.x, c.y, c.xy}) CHECK(chi[k].is_zero());
  }

  TEST_CASE("trivial label is rejected") {
    CHECK_THROWS_WITH_AS(induce_from_v(CharLabel::of(3, 0, 0), conjugacy_classes(3)),
                         "label must be nontrivial", UsageError);
  }

  TEST_CASE("orbit sums agree with the averaging formula") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      CAPTURE(p);
      const auto ct = conjugacy_classes(p);
      const brute::Group ref(p);
      for (const auto& l : label_orbits(ct.group().quaternion())) {
        const auto fast = induce_from_v(l, ct);
        CHECK(fast == induce_by_averaging(l, ct));
        for (std::size_t k = 0; k < ct.size(); ++k) {
          const auto g = to_brute(ct.group().element(ct.rep(k)));
          CHECK(close(brute::evaluate(fast[k]), ref.induced(l.a.value(), l.b.value(), g)));
          if (!ct.in_v(k)) CHECK(fast[k].is_zero());
        }
      }
    }
  }

  TEST_CASE("inflation at p = 3") {
    const auto ct = conjugacy_classes(3);
    const auto c = p3_classes(ct);
    const auto t = q8_character_table();
    const auto psi = inflate_from_q(t[4], ct);
    CHECK(psi[c.one] == Cyclotomic(2));
    CHECK(psi[c.v] == Cyclotomic(2));
    CHECK(psi[c.z] == Cyclotomic(-2));
    for (auto k : {c.x, c.y, c.xy}) CHECK(psi[k].is_zero());
    const auto one = inflate_from_q(t[0], ct);
    for (std::size_t k = 0; k < ct.size(); ++k) CHECK(one[k] == Cyclotomic(1));
  }

  TEST_CASE("inner products at p = 3") {
    const auto ct = conjugacy_classes(3);
    const auto chi = induce_from_v(CharLabel::of(3, 0, 1), ct);
    const auto psi = inflate_from_q(q8_character_table()[4], ct);
    CHECK(inner_product(ct, chi, chi) == Rational(1));
    CHECK(inner_product(ct, chi, psi) == Rational(0));
    CHECK(inner_product(ct, chi * chi, psi) == Rational(2));

    // Elementwise floating point reference for the last one.
    const brute::Group ref(3);
    brute::Complex s = 0;
    for (const auto& g : ref.elements) {
      const auto x = ref.induced(0, 1, g);
      s += x * x * psi_numeric(g, 3);
    }
    CHECK(close(s / 72.0, 2.0));
  }

  TEST_CASE("a non-rational inner product is an invariant violation") {
    const auto ct = conjugacy_classes(3);
    ClassFunction f{3, std::vector<Cyclotomic>(ct.size(), Cyclotomic(0))};
    f.values[0] = cyc_root(3, 1);
    ClassFunction one{3, std::vector<Cyclotomic>(ct.size(), Cyclotomic(1))};
    CHECK_THROWS_AS(inner_product(ct, f, one), InvariantViolation);
  }

  TEST_CASE("indicators at p = 3") {
    const auto ct = conjugacy_classes(3);
    const auto t = q8_character_table();
    const auto chi = induce_from_v(CharLabel::of(3, 0, 1), ct);
    const auto psi = inflate_from_q(t[4], ct);
    const auto one = inflate_from_q(t[0], ct);
    CHECK(fs_indicator(ct, chi) == 1);
    CHECK(fs_indicator(ct, psi) == -1);
    CHECK(fs_indicator(ct, one) == 1);
    CHECK(fs_indicator_direct(ct, chi) == 1);
    CHECK(fs_indicator_direct(ct, psi) == -1);
  }

  TEST_CASE("elementwise indicator breakdown at p = 3") {
    const brute::Group ref(3);
    const brute::Elem one{0, 0, 1, 0, 0, 1};
    brute::Complex identity = 0, nonzero_v = 0, z_fibre = 0, rest = 0;
    for (const auto& g : ref.elements) {
      const auto value = ref.induced(0, 1, ref.mul(g, g));
      if (g == one) identity += value;
      else if (brute::Group::in_v(g)) nonzero_v += value;
      else if (g[2] == 2 && g[5] == 2 && g[3] == 0 && g[4] == 0) z_fibre += value;
      else rest += value;
    }
    CHECK(close(identity, 8.0));
    CHECK(close(nonzero_v, -8.0));
    CHECK(close(z_fibre, 72.0));
    CHECK(close(rest, 0.0));
  }
}

TEST_SUITE("character table") {
  TEST_CASE("p = 3") {
    const auto table = character_table(3);
    REQUIRE(table.size() == 6);
    std::vector<std::int64_t> degrees, indicators;
    for (const auto& r : table.rows()) {
      degrees.push_back(r.degree);
      indicators.push_back(r.indicator);
    }
    CHECK(sorted(degrees) == std::vector<std::int64_t>{1, 1, 1, 1, 2, 8});
    CHECK(sorted(indicators) == std::vector<std::int64_t>{-1, 1, 1, 1, 1, 1});
    CHECK(table.row(CharacterTable::kPsiRow).name == "psi");
    CHECK(table.row(CharacterTable::kPsiRow).indicator == -1);
    CHECK(table.row(5).name == "chi_0_1");
  }

  TEST_CASE("p = 5") {
    const auto table = character_table(5);
    CHECK(table.size() == 8);
    std::int64_t s = 0;
    for (const auto& r : table.rows()) s += r.degree * r.degree;
    CHECK(s == 200);
  }

  TEST_CASE("row structure for the family") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      CAPTURE(p);
      const auto table = character_table(p);
      CHECK(table.size() == 5 + (p * p - 1) / 8);
      int minus = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& r = table.row(i);
        CHECK(fs_indicator_direct(table.classes(), r.values) == r.indicator);
        if (r.indicator == -1) {
          ++minus;
          CHECK(i == CharacterTable::kPsiRow);
        } else {
          CHECK(r.indicator == 1);
        }
        for (const auto& v : r.values.values) {
          CHECK(p % v.order() == 0);
          if (!r.label) CHECK((v.as_rational() && v.as_rational()->is_integer()));
        }
        CHECK(table.find(r.values) == i);
        CHECK(table.find(r.name) == i);
      }
      CHECK(minus == 1);
    }
  }

  TEST_CASE("orthogonality") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto table = character_table(p);
      const auto first = first_orthogonality(table);
      const auto second = second_orthogonality(table);
      for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
          CHECK(first[i][j] == Rational(i == j ? 1 : 0));
          const auto c = table.classes().centralizer_order(i);
          CHECK(second[i][j] == Rational(i == j ? static_cast<std::int64_t>(c) : 0));
        }
      CHECK(first == table.gram());
    }
  }

  TEST_CASE("sparse and generic inner products agree") {
    const auto table = character_table(5);
    std::vector<ClassFunction> rows;
    for (const auto& r : table.rows()) rows.push_back(r.values);
    std::vector<ClassFunction> squares;
    for (const auto& r : rows) squares.push_back(r * r);
    const auto m = inner_product_matrix(table.classes(), squares, rows);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        CHECK(m[i][j] == inner_product(table.classes(), squares[i], rows[j]));
  }

  TEST_CASE("tensor square at p = 3") {
    const auto table = character_table(3);
    const auto d = tensor_square_decompose(table, 5);
    std::map<std::string, std::int64_t> m;
    std::int64_t weighted = 0;
    for (const auto& x : d) {
      m[x.name] = x.multiplicity;
      weighted += x.multiplicity * x.degree;
    }
    CHECK(m == std::map<std::string, std::int64_t>{{"trivial", 1}, {"ker_X", 1}, {"ker_Y", 1},
                                                   {"ker_XY", 1}, {"psi", 2}, {"chi_0_1", 7}});
    CHECK(weighted == 64);
  }

  TEST_CASE("tensor squares of induced rows") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      const auto table = character_table(p);
      for (std::size_t i = 5; i < table.size(); ++i) {
        std::int64_t weighted = 0;
        for (const auto& x : tensor_square_decompose(table, i)) {
          CHECK(x.multiplicity >= 0);
          weighted += x.multiplicity * x.degree;
          if (x.name == "trivial") CHECK(x.multiplicity == 1);
          if (x.name == "psi") CHECK(x.multiplicity >= 1);
        }
        CHECK(weighted == 64);
      }
    }
  }

  TEST_CASE("bad primes") {
    CHECK_THROWS_AS(character_table(2), UsageError);
    CHECK_THROWS_AS(character_table(15), UsageError);
  }
}
