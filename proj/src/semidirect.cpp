#include <algorithm>
#include <numeric>

#include "fsfam/errors.hpp"
#include "fsfam/group.hpp"

namespace fsfam {

std::array<std::uint32_t, 6> GroupElement::encoding() const {
  const auto e = m.entries();
  return {v.x.value(), v.y.value(), e[0], e[1], e[2], e[3]};
}

GroupElement semidirect_mul(const GroupElement& g, const GroupElement& h) {
  return {g.v + g.m * h.v, g.m * h.m};
}

GroupElement semidirect_inv(const GroupElement& g) {
  const Mat2 mi = g.m.inverse();
  return {-(mi * g.v), mi};
}

SemidirectGroup::SemidirectGroup(QuaternionSubgroup q) : p_(q.prime()), quat_(std::move(q)) {
  constexpr std::size_t kQ = QuaternionSubgroup::kOrder;
  const std::size_t vsize = v_order();

  for (std::size_t qi = 0; qi < kQ; ++qi) {
    const auto e = quat_.element(qi).entries();
    auto& table = act_[qi];
    table.resize(vsize);
    for (std::uint64_t w0 = 0; w0 < p_; ++w0) {
      for (std::uint64_t w1 = 0; w1 < p_; ++w1) {
        const std::uint64_t r0 = (e[0] * w0 + e[1] * w1) % p_;
        const std::uint64_t r1 = (e[2] * w0 + e[3] * w1) % p_;
        table[w0 * p_ + w1] = static_cast<std::uint32_t>(r0 * p_ + r1);
      }
    }
  }

  // Lexicographic rank of each Q matrix by its entries.
  std::array<std::size_t, kQ> by_entries{};
  std::iota(by_entries.begin(), by_entries.end(), 0);
  std::sort(by_entries.begin(), by_entries.end(), [&](std::size_t a, std::size_t b) {
    return quat_.element(a).entries() < quat_.element(b).entries();
  });
  std::array<std::size_t, kQ> rank{};
  for (std::size_t r = 0; r < kQ; ++r) rank[by_entries[r]] = r;

  // Lex position of (0, I) moves to index 0; everything before it shifts up one.
  const std::size_t n = vsize * kQ;
  const std::size_t identity_lex = rank[0];
  v0_.resize(n);
  v1_.resize(n);
  qidx_.resize(n);
  vq_.resize(n);
  for (std::uint32_t a = 0; a < p_; ++a) {
    for (std::uint32_t b = 0; b < p_; ++b) {
      for (std::size_t qi = 0; qi < kQ; ++qi) {
        const std::size_t lex = (static_cast<std::size_t>(a) * p_ + b) * kQ + rank[qi];
        const std::size_t idx = lex == identity_lex ? 0 : (lex < identity_lex ? lex + 1 : lex);
        v0_[idx] = a;
        v1_[idx] = b;
        qidx_[idx] = static_cast<std::uint8_t>(qi);
        vq_[packed(a, b, qi)] = idx;
      }
    }
  }
}

GroupElement SemidirectGroup::element(std::size_t i) const {
  return {FpVec2{FpScalar(v0_.at(i), p_), FpScalar(v1_[i], p_)}, quat_.element(qidx_[i])};
}

std::vector<GroupElement> SemidirectGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::size_t SemidirectGroup::index_of(const GroupElement& g) const {
  const auto qi = quat_.index_of(g.m);
  ensure(qi.has_value(), "matrix part is not in the quaternion subgroup");
  ensure(g.v.x.modulus() == p_ && g.v.y.modulus() == p_, "vector over the wrong field");
  return index_of(g.v.x.value(), g.v.y.value(), *qi);
}

std::size_t SemidirectGroup::index_of(std::uint32_t v0, std::uint32_t v1,
                                      std::size_t q_index) const {
  return vq_.at(packed(v0 % p_, v1 % p_, q_index));
}

std::size_t SemidirectGroup::mul(std::size_t i, std::size_t j) const {
  const std::size_t qi = qidx_[i];
  const std::uint32_t w = act_[qi][static_cast<std::size_t>(v0_[j]) * p_ + v1_[j]];
  const std::uint32_t a = (v0_[i] + w / p_) % p_;
  const std::uint32_t b = (v1_[i] + w % p_) % p_;
  return vq_[packed(a, b, quat_.product(qi, qidx_[j]))];
}

std::size_t SemidirectGroup::inv(std::size_t i) const {
  const std::size_t qinv = quat_.inverse(qidx_[i]);
  const std::uint32_t w = act_[qinv][static_cast<std::size_t>(v0_[i]) * p_ + v1_[i]];
  const std::uint32_t a = (p_ - w / p_) % p_;
  const std::uint32_t b = (p_ - w % p_) % p_;
  return vq_[packed(a, b, qinv)];
}

std::size_t SemidirectGroup::power(std::size_t i, std::uint64_t k) const {
  std::size_t result = 0;
  std::size_t base = i;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::vector<GroupElement> enumerate_group(std::uint32_t p) {
  return SemidirectGroup(QuaternionSubgroup::canonical(p)).elements();
}

}  // namespace fsfam
