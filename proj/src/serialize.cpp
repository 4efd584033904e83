#include "fsfam/serialize.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <unistd.h>

#include "fsfam/errors.hpp"

namespace fsfam {

namespace {

std::string coefficient_string(const Cyclotomic& c) {
  std::vector<std::string> parts;
  for (const auto& r : c.coeffs()) parts.push_back(r.to_string());
  return fmt::format("{}:{}", c.order(), fmt::join(parts, ";"));
}

std::int64_t parse_integer(const Json& j) {
  const auto& s = j.get_ref<const std::string&>();
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw UsageError("malformed integer string '" + s + "'");
  return v;
}

const char* verdict(bool ok) { return ok ? "ok" : "FAILED"; }

}  // namespace

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) {
    coeffs.push_back(Json::array({std::to_string(r.num()), std::to_string(r.den())}));
  }
  return Json{{"n", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coeffs")) {
      coeffs.emplace_back(parse_integer(pair.at(0)), parse_integer(pair.at(1)));
    }
    return Cyclotomic(j.at("n").get<std::uint32_t>(), std::move(coeffs));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed cyclotomic value: ") + e.what());
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("malformed cyclotomic value: ") + e.what());
  }
}

TableRecord make_record(const CharacterTable& table) {
  const ClassTable& ct = table.classes();
  TableRecord r;
  r.prime = ct.prime();
  r.group_order = ct.group_order();
  for (std::size_t k = 0; k < ct.size(); ++k) {
    r.classes.push_back({ct.group().element(ct.rep(k)).encoding(), ct.class_size(k),
                         ct.centralizer_order(k)});
  }
  for (const auto& row : table.rows()) {
    r.characters.push_back({row.name, row.degree, row.indicator, row.values.values});
  }
  return r;
}

Json to_json(const TableRecord& record) {
  Json classes = Json::array();
  for (const auto& c : record.classes) {
    classes.push_back(Json{{"rep", c.rep}, {"size", c.size}, {"centralizer", c.centralizer}});
  }
  Json characters = Json::array();
  for (const auto& ch : record.characters) {
    Json values = Json::array();
    for (const auto& v : ch.values) values.push_back(to_json(v));
    characters.push_back(Json{{"name", ch.name},
                              {"degree", ch.degree},
                              {"indicator", ch.indicator},
                              {"values", std::move(values)}});
  }
  return Json{{"format", kFormatVersion},
              {"prime", record.prime},
              {"group_order", record.group_order},
              {"classes", std::move(classes)},
              {"characters", std::move(characters)}};
}

TableRecord table_from_json(const Json& j) {
  try {
    if (j.at("format").get<int>() != kFormatVersion) {
      throw UsageError("unsupported table format version");
    }
    TableRecord r;
    r.prime = j.at("prime").get<std::uint32_t>();
    r.group_order = j.at("group_order").get<std::size_t>();
    for (const auto& c : j.at("classes")) {
      r.classes.push_back({c.at("rep").get<std::array<std::uint32_t, 6>>(),
                           c.at("size").get<std::size_t>(), c.at("centralizer").get<std::size_t>()});
    }
    for (const auto& ch : j.at("characters")) {
      TableRecord::Character row{ch.at("name").get<std::string>(),
                                 ch.at("degree").get<std::int64_t>(),
                                 ch.at("indicator").get<std::int64_t>(),
                                 {}};
      for (const auto& v : ch.at("values")) row.values.push_back(cyclotomic_from_json(v));
      r.characters.push_back(std::move(row));
    }
    return r;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed table document: ") + e.what());
  }
}

std::string render_table_json(const TableRecord& record) { return to_json(record).dump(2) + "\n"; }

std::string render_table_text(const TableRecord& record) {
  std::ostringstream out;
  const std::uint32_t p = record.prime;
  out << fmt::format("G = (C_{0} x C_{0}) : Q8, p = {0}, |G| = {1}, {2} classes, {3} characters\n\n",
                     p, record.group_order, record.classes.size(), record.characters.size());
  out << "classes (rep = v0 v1 a b c d):\n";
  for (std::size_t k = 0; k < record.classes.size(); ++k) {
    const auto& c = record.classes[k];
    out << fmt::format("  K{:<3} rep ({}) size {} centralizer {}\n", k, fmt::join(c.rep, " "),
                       c.size, c.centralizer);
  }
  out << "\ncharacters:\n";
  for (const auto& ch : record.characters) {
    out << fmt::format("  {} (degree {}, indicator {:+d})\n", ch.name, ch.degree, ch.indicator);
    for (std::size_t k = 0; k < ch.values.size(); ++k) {
      out << fmt::format("    K{:<3} {}\n", k, ch.values[k].to_string());
    }
  }
  return out.str();
}

std::string render_table_csv(const TableRecord& record) {
  std::ostringstream out;
  out << "name,degree,indicator";
  for (const auto& c : record.classes) out << fmt::format(",{}", fmt::join(c.rep, " "));
  out << "\n";
  for (const auto& ch : record.characters) {
    out << fmt::format("{},{},{}", ch.name, ch.degree, ch.indicator);
    for (const auto& v : ch.values) out << "," << coefficient_string(v);
    out << "\n";
  }
  return out.str();
}

Json to_json(const Report& r) {
  Json chi_square = Json::array();
  for (const auto& m : r.chi_square) {
    chi_square.push_back(
        Json{{"name", m.name}, {"degree", m.degree}, {"multiplicity", m.multiplicity}});
  }
  Json alt = nullptr;
  if (r.alternative) {
    alt = Json{{"available", r.alternative->available},
               {"generators", r.alternative->generators},
               {"pass", r.alternative->pass}};
  }
  return Json{
      {"format", kFormatVersion},
      {"prime", r.prime},
      {"label", r.label.pair()},
      {"group_order", r.group_order},
      {"class_count", r.class_count},
      {"rows", r.row_names},
      {"degrees", r.degrees},
      {"indicators", r.indicators},
      {"chi", r.chi_row},
      {"stabilizer_order", r.stabilizer_order},
      {"chi_norm", r.chi_norm.to_string()},
      {"nu2", r.nu2},
      {"nu2_direct", r.nu2_direct},
      {"nu2_breakdown",
       Json{{"coset_term", r.coset_term},
            {"restriction_inner", r.restriction_inner.to_string()},
            {"restriction_term", r.restriction_term.to_string()}}},
      {"chi_square", std::move(chi_square)},
      {"psi_multiplicity", r.psi_multiplicity},
      {"trivial_multiplicity", r.trivial_multiplicity},
      {"psi_indicator", r.psi_indicator},
      {"claims",
       Json{{"irreducible", r.irreducible()},
            {"indicator_one", r.indicator_one()},
            {"contains_psi", r.contains_psi()}}},
      {"checks",
       Json{{"stabilizer_trivial", r.stabilizer_trivial()},
            {"vanishes_off_v", r.vanishes_off_v},
            {"first_orthogonality", r.checks.first_orthogonality},
            {"second_orthogonality", r.checks.second_orthogonality},
            {"degree_sum", r.checks.degree_sum},
            {"sum_rule",
             Json{{"pass", r.checks.sum_rule},
                  {"indicator_degree_sum", r.checks.indicator_degree_sum},
                  {"involution_count", r.checks.involution_count}}},
            {"square_locus",
             Json{{"pass", r.checks.square_locus}, {"size", r.checks.square_locus_size}}}}},
      {"alt_subgroup", std::move(alt)},
      {"pass", r.pass()},
      {"timings_ms", Json{{"table", r.table_ms}, {"verify", r.verify_ms}}},
  };
}

std::string render_report_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_report_text(const Report& r) {
  std::ostringstream out;
  const std::uint32_t p = r.prime;
  const std::int64_t v = static_cast<std::int64_t>(p) * p;
  out << fmt::format("G = (C_{0} x C_{0}) : Q8, p = {0}, |G| = {1}, {2} classes\n", p,
                     r.group_order, r.class_count);
  out << fmt::format("lambda = {}, chi = lambda^G = {}\n\n", r.label.to_string(), r.chi_row);
  out << fmt::format("1. stabilizer     |Q_lambda| = {} (z sends lambda to its conjugate)  [{}]\n",
                     r.stabilizer_order, verdict(r.stabilizer_trivial()));
  out << fmt::format("2. irreducible    <chi, chi> = {}  [{}]\n", r.chi_norm.to_string(),
                     verdict(r.irreducible()));
  out << fmt::format("   chi vanishes off V  [{}]\n", verdict(r.vanishes_off_v));
  out << fmt::format("3. indicator      |G| nu2(chi) = |V| chi(1) + |V| [chi_V, 1_V] = {} + {}*{} = {}\n",
                     r.coset_term, v, r.restriction_inner.to_string(),
                     (Rational(r.coset_term) + r.restriction_term).to_string());
  out << fmt::format("                  nu2(chi) = {} (class formula), {} (element-wise)  [{}]\n",
                     r.nu2, r.nu2_direct, verdict(r.indicator_one()));
  out << fmt::format("4. containment    [chi^2, psi] = {}, nu2(psi) = {}  [{}]\n",
                     r.psi_multiplicity, r.psi_indicator, verdict(r.contains_psi() && r.psi_indicator == -1));
  std::vector<std::string> terms;
  for (const auto& m : r.chi_square) {
    if (m.multiplicity != 0) terms.push_back(fmt::format("{}*{}", m.multiplicity, m.name));
  }
  out << fmt::format("   chi^2 = {}\n\n", fmt::join(terms, " + "));

  const auto& c = r.checks;
  out << "structural checks:\n";
  out << fmt::format("  first orthogonality   [{}]\n", verdict(c.first_orthogonality));
  out << fmt::format("  second orthogonality  [{}]\n", verdict(c.second_orthogonality));
  out << fmt::format("  sum of degree squares [{}]\n", verdict(c.degree_sum));
  out << fmt::format("  sum rule: {} = {} = 1 + {}²  [{}]\n", c.indicator_degree_sum,
                     c.involution_count, p, verdict(c.sum_rule));
  out << fmt::format("  square locus |V<z>| = {} = 2*{}  [{}]\n", c.square_locus_size, v,
                     verdict(c.square_locus));
  if (r.alternative) {
    if (r.alternative->available) {
      out << fmt::format("  alternative subgroup {}  [{}]\n", r.alternative->generators,
                         verdict(r.alternative->pass));
    } else {
      out << "  alternative subgroup: none (Q is normal in SL_2(p))\n";
    }
  }
  out << fmt::format("\nverdict: {}\n", r.pass() ? "PASS" : "FAIL");
  return out.str();
}

std::string render_report_csv(const Report& r) {
  std::ostringstream out;
  out << "prime,label,group_order,class_count,chi,chi_norm,nu2,nu2_direct,psi_multiplicity,pass\n";
  out << fmt::format("{},{} {},{},{},{},{},{},{},{},{}\n", r.prime, r.label.a.value(),
                     r.label.b.value(), r.group_order, r.class_count, r.chi_row,
                     r.chi_norm.to_string(), r.nu2, r.nu2_direct, r.psi_multiplicity,
                     r.pass() ? "pass" : "fail");
  return out.str();
}

Json to_json(const ScanSummary& s) {
  Json primes = Json::array();
  for (const auto& e : s.entries) {
    Json labels = Json::array();
    for (const auto& l : e.labels) {
      labels.push_back(Json{{"label", l.label.pair()},
                            {"pass", l.pass},
                            {"psi_multiplicity", l.psi_multiplicity}});
    }
    Json entry{{"prime", e.prime},
               {"group_order", e.group_order},
               {"class_count", e.class_count},
               {"labels", std::move(labels)},
               {"pass", e.pass}};
    if (!e.error.empty()) entry["error"] = e.error;
    entry["elapsed_ms"] = e.elapsed_ms;
    primes.push_back(std::move(entry));
  }
  Json out{{"format", kFormatVersion}, {"primes", std::move(primes)}, {"pass", s.pass()}};
  if (auto f = s.first_failure()) {
    out["first_failure"] = Json{{"prime", f->first},
                                {"label", f->second ? Json(f->second->pair()) : Json(nullptr)}};
  }
  return out;
}

std::string render_scan_json(const ScanSummary& s) { return to_json(s).dump(2) + "\n"; }

std::string render_scan_text(const ScanSummary& s) {
  std::ostringstream out;
  for (const auto& e : s.entries) {
    std::vector<std::string> mults;
    for (const auto& l : e.labels) mults.push_back(std::to_string(l.psi_multiplicity));
    out << fmt::format("p = {:<3} |G| = {:<6} labels {:<3} [chi^2, psi] = {{{}}}  {:.1f} ms  {}\n",
                       e.prime, e.group_order, e.labels.size(), fmt::join(mults, ","),
                       e.elapsed_ms, e.pass ? "PASS" : "FAIL");
    if (!e.error.empty()) out << "  error: " << e.error << "\n";
  }
  if (auto f = s.first_failure()) {
    out << fmt::format("first failure: p = {}{}\n", f->first,
                       f->second ? ", label " + f->second->to_string() : std::string());
  }
  out << fmt::format("{} primes, {}\n", s.entries.size(), s.pass() ? "all pass" : "FAILURES");
  return out.str();
}

std::string render_scan_csv(const ScanSummary& s) {
  std::ostringstream out;
  out << "prime,label,psi_multiplicity,pass\n";
  for (const auto& e : s.entries) {
    for (const auto& l : e.labels) {
      out << fmt::format("{},{} {},{},{}\n", e.prime, l.label.a.value(), l.label.b.value(),
                         l.psi_multiplicity, l.pass ? "pass" : "fail");
    }
  }
  return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target = fs::absolute(path);
  const std::size_t tid = std::hash<std::thread::id>{}(std::this_thread::get_id());
  const fs::path tmp = target.parent_path() /
                       fmt::format(".{}.tmp.{}.{}", target.filename().string(), ::getpid(), tid);
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path.string());
    f << content;
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw UsageError("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw UsageError(fmt::format("cannot write {}: {}", path.string(), ec.message()));
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t p) {
  return dir / fmt::format("table_p{}.json", p);
}

std::optional<TableRecord> load_cached_table(const std::filesystem::path& dir, std::uint32_t p) {
  std::ifstream f(cache_file(dir, p), std::ios::binary);
  if (!f) return std::nullopt;
  try {
    TableRecord r = table_from_json(Json::parse(f));
    if (r.prime != p) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached_table(const std::filesystem::path& dir, const TableRecord& record) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError(fmt::format("cannot create cache directory {}", dir.string()));
  write_atomic(cache_file(dir, record.prime), render_table_json(record));
}

}  // namespace fsfam
