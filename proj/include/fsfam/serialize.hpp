#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsfam/character_table.hpp"
#include "fsfam/cyclotomic.hpp"
#include "fsfam/scan.hpp"
#include "fsfam/theorem.hpp"

namespace fsfam {

using Json = nlohmann::ordered_json;

/// Version of every JSON document written here; cached files with another
/// version are ignored.
inline constexpr int kFormatVersion = 1;

/// {"n": 5, "coeffs": [["-1", "1"], ...]} with exact decimal strings.
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

/// Plain-data view of a character table: exactly what gets exported and cached.
struct TableRecord {
  struct Class {
    std::array<std::uint32_t, 6> rep{};
    std::size_t size = 0;
    std::size_t centralizer = 0;
    friend bool operator==(const Class&, const Class&) = default;
  };
  struct Character {
    std::string name;
    std::int64_t degree = 0;
    std::int64_t indicator = 0;
    std::vector<Cyclotomic> values;
    friend bool operator==(const Character&, const Character&) = default;
  };

  std::uint32_t prime = 0;
  std::size_t group_order = 0;
  std::vector<Class> classes;
  std::vector<Character> characters;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

TableRecord make_record(const CharacterTable& table);
Json to_json(const TableRecord& record);
/// Throws UsageError on a malformed document or a different format version.
TableRecord table_from_json(const Json& j);

std::string render_table_json(const TableRecord& record);
std::string render_table_text(const TableRecord& record);
/// One line per character; values as "n:c0;c1;..." power-basis coefficients.
std::string render_table_csv(const TableRecord& record);

Json to_json(const Report& report);
std::string render_report_json(const Report& report);
/// Laid out in the order of the argument: stabilizer, irreducibility,
/// indicator breakdown, containment of psi.
std::string render_report_text(const Report& report);
std::string render_report_csv(const Report& report);

Json to_json(const ScanSummary& summary);
std::string render_scan_json(const ScanSummary& summary);
std::string render_scan_text(const ScanSummary& summary);
std::string render_scan_csv(const ScanSummary& summary);

/// Writes through a temporary file in the same directory and renames it into
/// place. Throws UsageError when the location is not writable.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t p);
/// Cached record for p, if present, parseable and of the current format.
std::optional<TableRecord> load_cached_table(const std::filesystem::path& dir, std::uint32_t p);
void store_cached_table(const std::filesystem::path& dir, const TableRecord& record);

}  // namespace fsfam
