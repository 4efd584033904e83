#include "fsfam/selftest.hpp"

#include <functional>
#include <random>

#include <fmt/format.h>

#include "fsfam/character_table.hpp"
#include "fsfam/errors.hpp"
#include "fsfam/theorem.hpp"

namespace fsfam {

namespace {

using Check = std::function<std::string()>;  // returns the detail; throws or fails via ensure

class Runner {
 public:
  void run(const std::string& name, const Check& check) {
    CheckResult r{name, false, ""};
    try {
      r.detail = check();
      r.passed = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

Cyclotomic random_cyclotomic(std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclotomic(n, std::move(c));
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint32_t p, std::uint64_t seed) {
  require_odd_prime(p);
  std::mt19937_64 rng(seed);
  Runner run;

  // -- exact arithmetic ------------------------------------------------------
  run.run("cyclotomic ring axioms", [&] {
    constexpr int kSamples = 40;
    for (std::uint32_t n : {p, 12U}) {
      for (int i = 0; i < kSamples; ++i) {
        const auto a = random_cyclotomic(n, rng);
        const auto b = random_cyclotomic(n, rng);
        const auto c = random_cyclotomic(n, rng);
        ensure((a * b) * c == a * (b * c), "multiplication is not associative");
        ensure(a * (b + c) == a * b + a * c, "multiplication does not distribute");
        ensure(a * b == b * a, "multiplication is not commutative");
        ensure((a + b) - b == a, "subtraction does not undo addition");
      }
    }
    return fmt::format("{} samples each in Q(zeta_{}) and Q(zeta_12)", kSamples, p);
  });
  run.run("complex conjugation", [&] {
    for (int i = 0; i < 40; ++i) {
      const auto a = random_cyclotomic(p, rng);
      const auto b = random_cyclotomic(p, rng);
      ensure(a.conj().conj() == a, "conj is not an involution");
      ensure((a * b).conj() == a.conj() * b.conj(), "conj is not multiplicative");
    }
    for (std::int64_t k = 0; k < p; ++k) {
      const auto z = Cyclotomic::root(p, k);
      ensure(z * z.conj() == Cyclotomic(1), "root of unity without norm 1");
    }
    return std::string("involutive, multiplicative, |zeta^k|^2 = 1");
  });
  run.run("root sums vanish", [&] {
    for (std::uint32_t n = 2; n <= std::max<std::uint32_t>(p, 24); ++n) {
      Cyclotomic sum;
      for (std::int64_t k = 0; k < n; ++k) sum += Cyclotomic::root(n, k);
      ensure(sum.is_zero(), fmt::format("sum of {}-th roots is {}", n, sum.to_string()));
    }
    return std::string("n = 2..") + std::to_string(std::max<std::uint32_t>(p, 24));
  });
  run.run("cyclotomic polynomial degrees", [&] {
    for (std::uint32_t n = 1; n <= 40; ++n) {
      ensure(cyclotomic_polynomial(n).size() == euler_phi(n) + 1, "degree differs from phi(n)");
    }
    return std::string("deg Phi_n = phi(n) for n <= 40");
  });

  // -- group construction ----------------------------------------------------
  const CharacterTable table = character_table(p);
  const ClassTable& ct = table.classes();
  const SemidirectGroup& g = ct.group();
  const QuaternionSubgroup& q = g.quaternion();
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  const std::int64_t order = 8 * p2;

  run.run("group order", [&] {
    ensure(static_cast<std::int64_t>(g.order()) == order, "|G| != 8p^2");
    return fmt::format("|G| = {}", g.order());
  });
  run.run("group axioms", [&] {
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 500; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      ensure(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "not associative");
      ensure(g.mul(a, g.inv(a)) == 0 && g.mul(g.inv(a), a) == 0, "bad inverse");
      ensure(g.mul(0, a) == a && g.mul(a, 0) == a, "bad identity");
      const auto ga = g.element(a), gb = g.element(b);
      ensure(g.index_of(semidirect_mul(ga, gb)) == g.mul(a, b), "index and element products differ");
      ensure(g.index_of(semidirect_inv(ga)) == g.inv(a), "index and element inverses differ");
    }
    return std::string("500 random triples");
  });
  run.run("quaternion subgroup", [&] {
    const Mat2 id = Mat2::identity(p);
    std::size_t involutions = 0;
    for (const Mat2& m : q.elements()) {
      if (m != id && m * m == id) {
        ++involutions;
        ensure(m == -id, "involution other than -I");
      }
    }
    ensure(q.elements().size() == 8 && involutions == 1, "Q is not quaternion of order 8");
    return fmt::format("|Q| = 8, unique involution -I, X = {}, Y = {}", q.x().to_string(),
                       q.y().to_string());
  });
  run.run("z inverts V", [&] {
    const std::size_t zi = g.index_of(0, 0, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const std::size_t v = g.index_of(a, b, 0);
        ensure(g.conjugate(zi, v) == g.index_of(p - a, p - b, 0), "z does not invert v");
      }
    }
    return fmt::format("all {} vectors", p2);
  });
  run.run("class sizes", [&] {
    std::size_t total = 0;
    for (std::size_t k = 0; k < ct.size(); ++k) {
      ensure(ct.group_order() % ct.class_size(k) == 0, "class size does not divide |G|");
      ensure(ct.class_size(k) * ct.centralizer_order(k) == ct.group_order(),
             "size * centralizer != |G|");
      total += ct.class_size(k);
    }
    ensure(total == ct.group_order(), "sizes do not sum to |G|");
    return fmt::format("{} classes, sizes sum to {}", ct.size(), total);
  });
  run.run("class count", [&] {
    const std::int64_t expected = 5 + (p2 - 1) / 8;
    ensure(static_cast<std::int64_t>(ct.size()) == expected, "unexpected number of classes");
    return fmt::format("{} = 5 + ({}-1)/8", ct.size(), p2);
  });
  run.run("square map", [&] {
    for (std::size_t e = 0; e < g.order(); ++e) {
      ensure(ct.class_of(g.mul(e, e)) == ct.square_class(ct.class_of(e)),
             "square map depends on the representative");
    }
    ensure(square_map(ct) == std::vector<std::size_t>(ct.square_classes().begin(),
                                                      ct.square_classes().end()),
           "recomputed square map differs");
    return fmt::format("checked on all {} elements", g.order());
  });
  run.run("(vz)^2 = 1", [&] {
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const std::size_t vz = g.index_of(a, b, 1);
        ensure(g.mul(vz, vz) == 0, "(vz)^2 != 1");
      }
    }
    return fmt::format("all {} elements of the coset Vz", p2);
  });
  const TableChecks checks = check_table(table);
  run.run("square locus", [&] {
    ensure(checks.square_locus, "{g : g^2 in V} is not V<z>");
    return fmt::format("|{{g : g^2 in V}}| = {} = 2*{}", checks.square_locus_size, p2);
  });

  // -- character theory ------------------------------------------------------
  run.run("label action", [&] {
    for (const Mat2& m : q.elements()) {
      for (const Mat2& n : q.elements()) {
        for (std::uint32_t a = 0; a < p; ++a) {
          for (std::uint32_t b = 0; b < p; ++b) {
            const auto l = CharLabel::of(p, a, b);
            ensure(label_action(m * n, l) == label_action(m, label_action(n, l)),
                   "label action is not a group action");
          }
        }
      }
    }
    const auto l = CharLabel::of(p, 1, 0);
    ensure(label_action(q.z(), l) == CharLabel::of(p, p - 1, 0), "z does not negate labels");
    return std::string("functorial on Q x Q x Irr(V); z negates labels");
  });
  run.run("stabilizers", [&] {
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto l = CharLabel::of(p, a, b);
        const std::size_t expected = l.is_trivial() ? 8 : 1;
        ensure(stabilizer_in_q(q, l).size() == expected, "unexpected stabilizer " + l.to_string());
      }
    }
    return fmt::format("Q_lambda = 1 for all {} nontrivial labels", p2 - 1);
  });
  run.run("orbit count", [&] {
    const auto reps = label_orbits(q);
    ensure(static_cast<std::int64_t>(reps.size()) == (p2 - 1) / 8, "wrong number of orbits");
    return fmt::format("{} = (p^2-1)/8 orbits, each of size 8", reps.size());
  });
  run.run("degrees", [&] {
    ensure(checks.degree_sum, "sum of squared degrees != |G|");
    return fmt::format("sum of squares = {}", order);
  });
  run.run("first orthogonality", [&] {
    ensure(checks.first_orthogonality, "rows are not orthonormal");
    return fmt::format("{} x {} Gram matrix is the identity", table.size(), table.size());
  });
  run.run("second orthogonality", [&] {
    ensure(checks.second_orthogonality, "columns are not orthogonal");
    return std::string("column sums equal centralizer orders");
  });
  run.run("inner product routes agree", [&] {
    const RationalMatrix gram = first_orthogonality(table);
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        ensure(gram[i][j] == inner_product(ct, table.row(i).values, table.row(j).values),
               "sparse and generic inner products differ");
      }
    }
    return std::string("sparse kernel matches term-by-term sum");
  });
  run.run("sum rule", [&] {
    ensure(checks.sum_rule, fmt::format("sum nu2*deg = {}, involutions = {}",
                                        checks.indicator_degree_sum, checks.involution_count));
    return fmt::format("{} = 1 + {}²", checks.involution_count, p);
  });
  run.run("indicator paths agree", [&] {
    for (const auto& row : table.rows()) {
      ensure(fs_indicator_direct(ct, row.values) == row.indicator,
             "class and element-wise indicators differ for " + row.name);
    }
    return fmt::format("{} rows", table.size());
  });
  run.run("induction formulas agree", [&] {
    std::size_t n = 0;
    for (const auto& row : table.rows()) {
      if (!row.label) continue;
      ensure(induce_by_averaging(*row.label, ct) == row.values,
             "orbit sum and averaging differ for " + row.name);
      ++n;
    }
    return fmt::format("{} induced rows", n);
  });
  run.run("induced rows vanish off V", [&] {
    for (const auto& row : table.rows()) {
      if (!row.label) continue;
      for (std::size_t k = 0; k < ct.size(); ++k) {
        if (!ct.in_v(k)) ensure(row.values[k].is_zero(), row.name + " is nonzero off V");
      }
    }
    return std::string("literal zero on every class outside V");
  });
  run.run("indicators", [&] {
    std::size_t minus = 0;
    for (const auto& row : table.rows()) {
      if (row.indicator == -1) {
        ++minus;
        ensure(row.name == "psi" && row.degree == 2, "indicator -1 on a row other than psi");
      } else {
        ensure(row.indicator == 1, "indicator other than +-1 on " + row.name);
      }
    }
    ensure(minus == 1, "expected exactly one indicator -1");
    return std::string("psi is the only row with indicator -1");
  });
  run.run("tensor squares", [&] {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto m = tensor_square_decompose(table, i);
      std::int64_t weighted = 0;
      for (const auto& x : m) weighted += x.multiplicity * x.degree;
      ensure(weighted == table.row(i).degree * table.row(i).degree, "degree mismatch");
    }
    return std::string("non-negative integer multiplicities for every row");
  });
  run.run("value fields", [&] {
    for (const auto& row : table.rows()) {
      for (const auto& v : row.values.values) {
        ensure(p % v.order() == 0, row.name + " has a value outside Q(zeta_p)");
        if (!row.label) ensure(v.as_rational().has_value(), row.name + " is not rational");
      }
    }
    return fmt::format("values in Q(zeta_{}); inflated rows rational", p);
  });

  return run.take();
}

}  // namespace fsfam
