#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "fsfam/errors.hpp"
#include "fsfam/group.hpp"

namespace fsfam {

ClassTable::ClassTable(SemidirectGroup group) : group_(std::move(group)) {
  const std::size_t n = group_.order();
  const std::vector<std::size_t> generators = {
      group_.index_of(1, 0, 0), group_.index_of(0, 1, 0),
      group_.index_of(0, 0, 2),  // (0, X)
      group_.index_of(0, 0, 4),  // (0, Y)
  };

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnset);
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != kUnset) continue;
    const std::size_t k = reps_.size();
    reps_.push_back(start);
    std::vector<std::size_t> orbit{start};
    class_of_[start] = k;
    std::deque<std::size_t> frontier{start};
    while (!frontier.empty()) {
      const std::size_t h = frontier.front();
      frontier.pop_front();
      for (std::size_t g : generators) {
        const std::size_t c = group_.conjugate(g, h);
        if (class_of_[c] == kUnset) {
          class_of_[c] = k;
          orbit.push_back(c);
          frontier.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members_.push_back(std::move(orbit));
  }

  std::size_t total = 0;
  for (const auto& m : members_) {
    ensure(n % m.size() == 0, "class size does not divide |G|");
    total += m.size();
  }
  ensure(total == n, "class sizes do not sum to |G|");
  ensure(reps_.front() == 0 && members_.front().size() == 1, "class 0 must be {1}");

  square_ = power_map(*this, 2);
}

ClassTable conjugacy_classes(std::uint32_t p) {
  return ClassTable(SemidirectGroup(QuaternionSubgroup::canonical(p)));
}

std::vector<std::size_t> power_map(const ClassTable& ct, std::uint64_t k) {
  const SemidirectGroup& g = ct.group();
  std::vector<std::size_t> out(ct.size());
  for (std::size_t c = 0; c < ct.size(); ++c) {
    out[c] = ct.class_of(g.power(ct.rep(c), k));
    for (std::size_t e : ct.members(c)) {
      if (ct.class_of(g.power(e, k)) != out[c]) {
        throw InvariantViolation(
            fmt::format("power map {} depends on the representative of class {}", k, c));
      }
    }
  }
  return out;
}

std::size_t count_square_roots_of_identity(const ClassTable& ct) {
  const SemidirectGroup& g = ct.group();
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.mul(i, i) == 0) ++count;
  }
  return count;
}

}  // namespace fsfam
