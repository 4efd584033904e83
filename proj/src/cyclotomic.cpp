#include "fsfam/cyclotomic.hpp"

#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "fsfam/errors.hpp"

namespace fsfam {

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) {
    throw UsageError("phi(0) is undefined");
  }
  std::uint32_t result = n;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Divides `num` by the monic `den` in place; returns the quotient.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    throw InvariantViolation("cyclotomic division: dividend degree too small");
  }
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] = checked::sub(num[i - dd + j], checked::mul(c, den[j]));
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    ensure(num[i] == 0, "cyclotomic division left a nonzero remainder");
  }
  return quot;
}

// References into an unordered_map stay valid across rehashing.
const std::vector<std::int64_t>& modulus_for(std::uint32_t n) {
  thread_local std::unordered_map<std::uint32_t, std::vector<std::int64_t>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, cyclotomic_polynomial(n)).first;
  }
  return it->second;
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) {
    throw UsageError("cyclotomic polynomial of order 0");
  }
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) {
      poly = divide_exact(std::move(poly), modulus_for(d));
    }
  }
  ensure(poly.size() == euler_phi(n) + 1, "cyclotomic polynomial has the wrong degree");
  return poly;
}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<Rational> coeffs)
    : order_(n), coeffs_(std::move(coeffs)) {
  if (n == 0) {
    throw UsageError("cyclotomic order must be positive");
  }
  if (coeffs_.size() != euler_phi(n)) {
    throw UsageError(fmt::format("Q(zeta_{}) needs {} coefficients, got {}", n, euler_phi(n),
                                 coeffs_.size()));
  }
}

void Cyclotomic::reduce_from(std::vector<Rational> v) {
  const auto& phi_poly = modulus_for(order_);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    const Rational c = v[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) {
        v[i - deg + j] -= c * Rational(phi_poly[j]);
      }
    }
    v[i] = Rational();
  }
  v.resize(deg);
  coeffs_ = std::move(v);
}

Cyclotomic Cyclotomic::root(std::uint32_t n, std::int64_t k) {
  if (n == 0) {
    throw UsageError("root of unity of order 0");
  }
  const std::int64_t m = n;
  const auto e = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> v(std::max<std::size_t>(e + 1, 1));
  v[e] = 1;
  Cyclotomic r;
  r.order_ = n;
  r.reduce_from(std::move(v));
  return r;
}

Cyclotomic Cyclotomic::from_root_counts(std::uint32_t n, std::span<const std::int64_t> counts) {
  if (n == 0) {
    throw UsageError("root of unity of order 0");
  }
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) v[k % n] += counts[k];
  }
  Cyclotomic r;
  r.order_ = n;
  r.reduce_from(std::move(v));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(std::uint32_t m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0) {
    throw InvariantViolation(fmt::format("cannot lift Q(zeta_{}) into Q(zeta_{})", order_, m));
  }
  const std::size_t step = m / order_;
  std::vector<Rational> v(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i * step] = coeffs_[i];
  }
  Cyclotomic r;
  r.order_ = m;
  r.reduce_from(std::move(v));
  return r;
}

Cyclotomic Cyclotomic::normalized() const {
  if (auto q = as_rational()) return Cyclotomic(*q);
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  std::vector<Rational> v(order_);
  v[0] = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[order_ - i] = coeffs_[i];
  }
  Cyclotomic r;
  r.order_ = order_;
  r.reduce_from(std::move(v));
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const std::uint32_t m = common_order(order_, rhs.order_);
    *this = lift(m);
    return *this += rhs.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const std::uint32_t m = common_order(order_, rhs.order_);
    *this = lift(m);
    return *this *= rhs.lift(m);
  }
  if (order_ <= 2) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!rhs.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce_from(std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& rhs) {
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t m = common_order(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += fmt::format("E({})", order_);
    if (i > 1) out += fmt::format("^{}", i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fsfam
