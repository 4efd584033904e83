#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fsfam/errors.hpp"
#include "fsfam/serialize.hpp"

using namespace fsfam;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fsfam_test_" + std::to_string(std::random_device{}()) + "_" +
            std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t file_count(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("cyclotomic round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (std::uint32_t n : {1u, 3u, 5u, 12u, 13u}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c(euler_phi(n));
        for (auto& x : c) x = Rational(d(rng), (d(rng) & 7) + 1);
        const Cyclotomic value(n, c);
        const auto back = cyclotomic_from_json(to_json(value));
        CHECK(back == value);
        CHECK(back.order() == value.order());
        CHECK(back.coeffs() == value.coeffs());
      }
    }
    CHECK(to_json(cyc_root(3, 2)).dump() == R"({"n":3,"coeffs":[["-1","1"],["-1","1"]]})");
  }

  TEST_CASE("table record round trip") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto record = make_record(character_table(p));
      const auto back = table_from_json(Json::parse(render_table_json(record)));
      CHECK(back == record);
      CHECK(render_table_json(back) == render_table_json(record));
    }
  }

  TEST_CASE("table schema") {
    const auto j = Json::parse(render_table_json(make_record(character_table(3))));
    CHECK(j["format"] == 1);
    CHECK(j["prime"] == 3);
    CHECK(j["group_order"] == 72);
    REQUIRE(j["classes"].size() == 6);
    CHECK(j["classes"][0]["rep"] == Json::array({0, 0, 1, 0, 0, 1}));
    CHECK(j["classes"][0]["size"] == 1);
    CHECK(j["classes"][0]["centralizer"] == 72);
    REQUIRE(j["characters"].size() == 6);
    CHECK(j["characters"][4]["name"] == "psi");
    CHECK(j["characters"][4]["indicator"] == -1);
    CHECK(j["characters"][5]["values"].size() == 6);
  }

  TEST_CASE("malformed documents") {
    auto j = Json::parse(render_table_json(make_record(character_table(3))));
    auto wrong_version = j;
    wrong_version["format"] = 2;
    CHECK_THROWS_AS(table_from_json(wrong_version), UsageError);
    auto missing = j;
    missing.erase("classes");
    CHECK_THROWS_AS(table_from_json(missing), UsageError);
    CHECK_THROWS_AS(table_from_json(Json::array()), UsageError);
    CHECK_THROWS(cyclotomic_from_json(Json::parse(R"({"n":5,"coeffs":[["1","1"]]})")));
  }

  TEST_CASE("csv values are exact coefficient strings") {
    const auto csv = render_table_csv(make_record(character_table(3)));
    CHECK(csv.find("chi_0_1,8,1,1:8,") != std::string::npos);
    CHECK(csv.find("psi,2,-1,1:2,") != std::string::npos);
    const auto csv7 = render_table_csv(make_record(character_table(7)));
    CHECK(csv7.find(",7:-3;0;-2;-3;-3;-2") != std::string::npos);
  }

  TEST_CASE("text table header") {
    const auto text = render_table_text(make_record(character_table(5)));
    CHECK(text.find("|G| = 200") != std::string::npos);
  }

  TEST_CASE("report rendering") {
    const auto r = verify_theorem_a(3);
    const auto j = Json::parse(render_report_json(r));
    CHECK(j["format"] == 1);
    CHECK(j["group_order"] == 72);
    CHECK(j["psi_multiplicity"] == 2);
    CHECK(j["pass"] == true);
    const auto text = render_report_text(r);
    const auto stab = text.find("stabilizer"), irr = text.find("irreducib"),
               ind = text.find("indicator"), cont = text.find("contain");
    CHECK(stab < irr);
    CHECK(irr < ind);
    CHECK(ind < cont);
    CHECK(cont != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK_FALSE(render_report_csv(r).empty());
  }

  TEST_CASE("scan rendering ignores nothing but timing") {
    const auto a = run_scan(3, 7, 1), b = run_scan(3, 7, 3);
    auto ja = to_json(a), jb = to_json(b);
    for (auto* j : {&ja, &jb})
      for (auto& e : (*j)["primes"]) e.erase("elapsed_ms");
    CHECK(ja == jb);
  }
}

TEST_SUITE("files") {
  TEST_CASE("atomic write leaves only the target") {
    TempDir dir;
    const auto target = dir.path / "out.json";
    write_atomic(target, "first\n");
    write_atomic(target, "second\n");
    CHECK(slurp(target) == "second\n");
    CHECK(file_count(dir.path) == 1);
  }

  TEST_CASE("unwritable location") {
    TempDir dir;
    CHECK_THROWS_AS(write_atomic(dir.path / "missing" / "out.json", "x"), UsageError);
    CHECK(file_count(dir.path) == 0);
  }

  TEST_CASE("cache round trip") {
    TempDir dir;
    CHECK(cache_file(dir.path, 5).filename() == "table_p5.json");
    CHECK_FALSE(load_cached_table(dir.path, 5).has_value());
    const auto fresh = make_record(character_table(5));
    store_cached_table(dir.path, fresh);
    const auto loaded = load_cached_table(dir.path, 5);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == fresh);
    CHECK(render_table_json(*loaded) == slurp(cache_file(dir.path, 5)));
  }

  TEST_CASE("cache rejects other versions and corrupt files") {
    TempDir dir;
    auto j = to_json(make_record(character_table(3)));
    j["format"] = 0;
    write_atomic(cache_file(dir.path, 3), j.dump());
    CHECK_FALSE(load_cached_table(dir.path, 3).has_value());
    write_atomic(cache_file(dir.path, 3), "{not json");
    CHECK_FALSE(load_cached_table(dir.path, 3).has_value());
    // A file for the wrong prime under this name is ignored too.
    write_atomic(cache_file(dir.path, 3), render_table_json(make_record(character_table(5))));
    CHECK_FALSE(load_cached_table(dir.path, 3).has_value());
  }
}
