#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "brute_force.hpp"
#include "fsfam/cyclotomic.hpp"
#include "fsfam/errors.hpp"
#include "fsfam/finite_field.hpp"
#include "fsfam/rational.hpp"

using namespace fsfam;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = Rational(coeff(rng), den(rng));
  return Cyclotomic(n, c);
}

bool close(brute::Complex a, brute::Complex b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("normalization and printing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  }

  TEST_CASE("overflow is detected") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), ArithmeticError);
    CHECK_THROWS_AS(big * Rational(2), ArithmeticError);
    CHECK_THROWS_AS(-Rational(std::numeric_limits<std::int64_t>::min()), ArithmeticError);
  }

  TEST_CASE("field laws on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
      const Rational a(d(rng), d(rng) | 1), b(d(rng), d(rng) | 1), c(d(rng), d(rng) | 1);
      CHECK((a + b) - b == a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      const long double x = static_cast<long double>(a.num()) / a.den();
      const long double y = static_cast<long double>(b.num()) / b.den();
      CHECK(((a < b) == (x < y)));
    }
  }
}

TEST_SUITE("finite field") {
  TEST_CASE("inverse examples") {
    CHECK(fp_inv(FpScalar(2, 5)).value() == 3);
    CHECK(fp_inv(FpScalar(1, 3)).value() == 1);
    CHECK(fp_inv(FpScalar(4, 7)).value() == 2);
    CHECK_THROWS_AS(fp_inv(FpScalar(0, 7)), ArithmeticError);
  }

  TEST_CASE("every nonzero residue has an inverse") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 97u})
      for (std::uint32_t x = 1; x < p; ++x)
        CHECK((FpScalar(x, p) * fp_inv(FpScalar(x, p))).value() == 1);
  }

  TEST_CASE("reduction of negatives") {
    CHECK(FpScalar(-1, 3).value() == 2);
    CHECK(FpScalar(-12, 5).value() == 3);
  }

  TEST_CASE("prime validation") {
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK_NOTHROW(require_odd_prime(3));
    CHECK_THROWS_AS(require_odd_prime(2), UsageError);
    CHECK_THROWS_AS(require_odd_prime(9), UsageError);
    CHECK_THROWS_AS(require_odd_prime(101), UsageError);
    CHECK_NOTHROW(require_odd_prime(101, 200));
    CHECK_THROWS_WITH(require_odd_prime(4), "4 is not an odd prime");
  }

  TEST_CASE("matrix arithmetic") {
    const Mat2 m = Mat2::from_ints(7, 2, 3, 1, 5);
    CHECK_THROWS(m.inverse());
    CHECK(m.det().value() == 0);  // 10 - 3 = 7
    const Mat2 n = Mat2::from_ints(7, 1, 2, 3, 4);
    CHECK(n * n.inverse() == Mat2::identity(7));
    CHECK(n.transpose().transpose() == n);
    CHECK(n.to_string() == "[[1,2],[3,4]]");
    const FpVec2 v{FpScalar(1, 7), FpScalar(1, 7)};
    CHECK((n * v) == FpVec2{FpScalar(3, 7), FpScalar(0, 7)});
  }
}

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomial examples") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  }

  TEST_CASE("cyclotomic polynomials agree with the product over primitive roots") {
    for (std::uint32_t n = 1; n <= 60; ++n) {
      CAPTURE(n);
      const auto poly = cyclotomic_polynomial(n);
      CHECK(poly.size() == euler_phi(n) + 1);
      CHECK(poly == brute::cyclotomic_by_roots(n));
    }
  }

  TEST_CASE("root examples") {
    CHECK(cyc_root(3, 0) == Cyclotomic(1));
    CHECK(cyc_root(3, 2) == Cyclotomic(3, {Rational(-1), Rational(-1)}));
    CHECK(cyc_root(3, 2).to_string() == "-1 - E(3)");
    CHECK(cyc_root(5, 7) == cyc_root(5, 2));
    CHECK(cyc_root(5, -1) == cyc_root(5, 4));
  }

  TEST_CASE("multiplication examples") {
    CHECK(cyc_mul(cyc_root(3, 1), cyc_root(3, 2)) == Cyclotomic(1));
    CHECK(cyc_mul(cyc_root(3, 1) + cyc_root(3, 2), Cyclotomic(1)) == Cyclotomic(-1));
    CHECK(cyc_mul(cyc_root(5, 2), cyc_root(5, 4)) == cyc_root(5, 1));
  }

  TEST_CASE("conjugation examples") {
    CHECK(cyc_conj(Cyclotomic(1)) == Cyclotomic(1));
    CHECK(cyc_conj(cyc_root(5, 2)) == cyc_root(5, 3));
    CHECK(cyc_conj(cyc_root(3, 1)) == Cyclotomic(3, {Rational(-1), Rational(-1)}));
  }

  TEST_CASE("rationality examples") {
    CHECK(cyc_as_rational(Cyclotomic(3, {Rational(1), Rational(0)})) == Rational(1));
    CHECK_FALSE(cyc_as_rational(cyc_root(3, 1)).has_value());
    CHECK(cyc_as_rational(cyc_root(3, 1) + cyc_conj(cyc_root(3, 1))) == Rational(-1));
  }

  TEST_CASE("mixed orders lift to a common field") {
    const Cyclotomic s = cyc_root(3, 1) + cyc_root(4, 1);
    CHECK(s.order() == 12);
    CHECK(close(brute::evaluate(s), brute::evaluate(cyc_root(3, 1)) + brute::evaluate(cyc_root(4, 1))));
    CHECK(Cyclotomic(7, std::vector<Rational>(6, Rational(0))) == Cyclotomic(0));
  }

  TEST_CASE("sum of all n-th roots vanishes") {
    for (std::uint32_t n : {2u, 3u, 5u, 6u, 9u, 12u, 13u}) {
      Cyclotomic s;
      for (std::uint32_t k = 0; k < n; ++k) s += cyc_root(n, k);
      CHECK(s.is_zero());
    }
  }

  TEST_CASE("random samples satisfy ring and conjugation laws") {
    std::mt19937_64 rng(20240229);
    const std::uint32_t orders[] = {1, 3, 4, 5, 7, 8, 9, 12, 13, 15};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(orders) - 1);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_cyclotomic(rng, orders[pick(rng)]);
      const auto b = random_cyclotomic(rng, orders[pick(rng)]);
      const auto c = random_cyclotomic(rng, orders[pick(rng)]);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a - a).is_zero());
      // Independent check through floating point evaluation.
      CHECK(close(brute::evaluate(a * b), brute::evaluate(a) * brute::evaluate(b)));
      CHECK(close(brute::evaluate(a.conj()), std::conj(brute::evaluate(a))));
      const auto norm = (a * a.conj()).normalized();
      CHECK(close(brute::evaluate(norm), std::norm(brute::evaluate(a))));
    }
  }

  TEST_CASE("bad coefficient count is rejected") {
    CHECK_THROWS(Cyclotomic(5, {Rational(1), Rational(2)}));
  }
}
