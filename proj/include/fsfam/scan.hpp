#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsfam/characters.hpp"

namespace fsfam {

struct ScanLabelResult {
  CharLabel label;
  bool pass = false;
  std::int64_t psi_multiplicity = 0;

  friend bool operator==(const ScanLabelResult&, const ScanLabelResult&) = default;
};

struct ScanEntry {
  std::uint32_t prime = 0;
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::vector<ScanLabelResult> labels;  // one per orbit representative
  bool pass = false;
  std::string error;  // set when the pipeline threw
  double elapsed_ms = 0.0;

  /// Everything except the timing.
  bool same_result(const ScanEntry& o) const {
    return prime == o.prime && group_order == o.group_order && class_count == o.class_count &&
           labels == o.labels && pass == o.pass && error == o.error;
  }
};

struct ScanSummary {
  std::vector<ScanEntry> entries;  // ascending prime

  bool pass() const;
  /// First failing (prime, label) in prime order; label empty if the whole prime failed.
  std::optional<std::pair<std::uint32_t, std::optional<CharLabel>>> first_failure() const;
  bool same_results(const ScanSummary& o) const;
};

/// Odd primes in [lo, hi]; throws UsageError for an empty or out-of-bound range.
std::vector<std::uint32_t> odd_primes_in(std::int64_t lo, std::int64_t hi);

/// Verifies every orbit representative for every odd prime in [lo, hi],
/// distributing primes over `jobs` worker threads.
ScanSummary run_scan(std::int64_t lo, std::int64_t hi, unsigned jobs = 1);

}  // namespace fsfam
