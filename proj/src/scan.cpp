#include "fsfam/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <fmt/format.h>

#include "fsfam/errors.hpp"
#include "fsfam/theorem.hpp"

namespace fsfam {

bool ScanSummary::pass() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const ScanEntry& e) { return e.pass; });
}

std::optional<std::pair<std::uint32_t, std::optional<CharLabel>>> ScanSummary::first_failure()
    const {
  for (const auto& e : entries) {
    if (e.pass) continue;
    for (const auto& l : e.labels) {
      if (!l.pass) return std::pair{e.prime, std::optional<CharLabel>(l.label)};
    }
    return std::pair{e.prime, std::optional<CharLabel>()};
  }
  return std::nullopt;
}

bool ScanSummary::same_results(const ScanSummary& o) const {
  return std::equal(entries.begin(), entries.end(), o.entries.begin(), o.entries.end(),
                    [](const ScanEntry& a, const ScanEntry& b) { return a.same_result(b); });
}

std::vector<std::uint32_t> odd_primes_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw UsageError(fmt::format("empty prime range {}..{}", lo, hi));
  }
  if (hi > static_cast<std::int64_t>(kDefaultPrimeBound)) {
    throw UsageError(fmt::format("prime range exceeds the bound {}", kDefaultPrimeBound));
  }
  std::vector<std::uint32_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n) {
    if (n % 2 == 1 && is_prime(static_cast<std::uint64_t>(n))) {
      out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  if (out.empty()) {
    throw UsageError(fmt::format("no odd primes in {}..{}", lo, hi));
  }
  return out;
}

namespace {

ScanEntry scan_prime(std::uint32_t p) {
  const auto start = std::chrono::steady_clock::now();
  ScanEntry entry;
  entry.prime = p;
  try {
    const CharacterTable table = character_table(p);
    const TableChecks checks = check_table(table);
    entry.group_order = table.classes().group_order();
    entry.class_count = table.classes().size();
    entry.pass = true;
    for (const auto& label : label_orbits(table.classes().group().quaternion())) {
      const Report r = verify_theorem_a(table, checks, label);
      entry.labels.push_back({label, r.pass(), r.psi_multiplicity});
      entry.pass = entry.pass && r.pass();
    }
  } catch (const std::exception& e) {
    entry.pass = false;
    entry.error = e.what();
  }
  entry.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

}  // namespace

ScanSummary run_scan(std::int64_t lo, std::int64_t hi, unsigned jobs) {
  const std::vector<std::uint32_t> primes = odd_primes_in(lo, hi);
  ScanSummary summary;
  summary.entries.resize(primes.size());

  const unsigned workers = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(primes.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      summary.entries[i] = scan_prime(primes[i]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return summary;
}

}  // namespace fsfam
