// fsfam: character tables and Frobenius-Schur checks for (C_p x C_p) : Q8.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fsfam/errors.hpp"
#include "fsfam/scan.hpp"
#include "fsfam/selftest.hpp"
#include "fsfam/serialize.hpp"
#include "fsfam/theorem.hpp"

namespace {

using namespace fsfam;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

constexpr const char* kCacheEnv = "FSFAM_CACHE_DIR";

struct CliConfig {
  std::int64_t prime = 0;
  std::string primes;  // "A..B"
  std::string label;   // "a,b"
  std::string format = "text";
  std::string out;
  std::string cache;
  unsigned jobs = 1;
  bool alt_subgroup = false;
};

void emit(const CliConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content << std::flush;
  } else {
    write_atomic(cfg.out, content);
  }
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& s, const std::string& sep,
                                                 const char* what) {
  const auto at = s.find(sep);
  if (at == std::string::npos) {
    throw UsageError(fmt::format("{} must look like A{}B, got '{}'", what, sep, s));
  }
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, at), b = s.substr(at + sep.size());
    const std::int64_t x = std::stoll(a, &used_a);
    const std::int64_t y = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(fmt::format("{} must look like A{}B, got '{}'", what, sep, s));
  }
}

int cmd_verify(const CliConfig& cfg) {
  std::optional<std::pair<std::int64_t, std::int64_t>> label;
  if (!cfg.label.empty()) label = parse_pair(cfg.label, ",", "--label");
  const Report report = verify_theorem_a(cfg.prime, label, {.alternative_subgroup = cfg.alt_subgroup});
  if (cfg.format == "json") {
    emit(cfg, render_report_json(report));
  } else if (cfg.format == "csv") {
    emit(cfg, render_report_csv(report));
  } else {
    emit(cfg, render_report_text(report));
  }
  return report.pass() ? kPass : kFail;
}

int cmd_table(const CliConfig& cfg) {
  require_odd_prime(cfg.prime);
  const auto p = static_cast<std::uint32_t>(cfg.prime);
  std::string cache_dir = cfg.cache;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) cache_dir = env;
  }

  std::optional<TableRecord> record;
  if (!cache_dir.empty()) {
    record = load_cached_table(cache_dir, p);
    if (record) std::cerr << "cache hit: " << cache_file(cache_dir, p).string() << "\n";
  }
  if (!record) {
    record = make_record(character_table(p));
    if (!cache_dir.empty()) {
      store_cached_table(cache_dir, *record);
      std::cerr << "cache store: " << cache_file(cache_dir, p).string() << "\n";
    }
  }

  if (cfg.format == "json") {
    emit(cfg, render_table_json(*record));
  } else if (cfg.format == "csv") {
    emit(cfg, render_table_csv(*record));
  } else {
    emit(cfg, render_table_text(*record));
  }
  return kPass;
}

int cmd_scan(const CliConfig& cfg) {
  const auto [lo, hi] = parse_pair(cfg.primes, "..", "--primes");
  const ScanSummary summary = run_scan(lo, hi, cfg.jobs);
  if (cfg.format == "json") {
    emit(cfg, render_scan_json(summary));
  } else if (cfg.format == "csv") {
    emit(cfg, render_scan_csv(summary));
  } else {
    emit(cfg, render_scan_text(summary));
  }
  if (auto f = summary.first_failure()) {
    std::cerr << fmt::format("verification failed at p = {}{}\n", f->first,
                             f->second ? ", label " + f->second->to_string() : std::string());
    return kFail;
  }
  return kPass;
}

int cmd_selftest(const CliConfig& cfg) {
  require_odd_prime(cfg.prime);
  const auto results = run_selftest(static_cast<std::uint32_t>(cfg.prime));
  bool all = true;
  std::string text;
  Json json = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    text += fmt::format("{}  {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
    json.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  text += fmt::format("{} of {} checks passed\n",
                      std::count_if(results.begin(), results.end(),
                                    [](const CheckResult& r) { return r.passed; }),
                      results.size());
  if (cfg.format == "json") {
    emit(cfg, Json{{"format", kFormatVersion}, {"prime", cfg.prime}, {"checks", json}, {"pass", all}}
                      .dump(2) + "\n");
  } else {
    emit(cfg, text);
  }
  return all ? kPass : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, Frobenius-Schur indicators and tensor squares of (C_p x C_p) : Q8"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "Check the theorem for one prime and label");
  verify->add_option("--prime", cfg.prime, "Odd prime p")->required();
  verify->add_option("--label", cfg.label, "Character label a,b of V (default 0,1)");
  verify->add_flag("--alt-subgroup", cfg.alt_subgroup,
                   "Repeat the checks with a second quaternion subgroup");
  add_format(verify);

  auto* table = app.add_subcommand("table", "Print the character table");
  table->add_option("--prime", cfg.prime, "Odd prime p")->required();
  table->add_option("--cache", cfg.cache,
                    fmt::format("Cache directory (default: ${})", kCacheEnv));
  add_format(table);

  auto* scan = app.add_subcommand("scan", "Verify every orbit label for a range of primes");
  scan->add_option("--primes", cfg.primes, "Prime range A..B")->required();
  scan->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(scan);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite for one prime");
  selftest->add_option("--prime", cfg.prime, "Odd prime p")->required();
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
