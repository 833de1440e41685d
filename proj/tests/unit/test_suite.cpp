#include "doctest.h"

#include <cmath>

#include "cpotts/errors.hpp"
#include "cpotts/suite.hpp"
#include "json.hpp"

using cpotts::SuiteConfig;
using json = nlohmann::json;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

SuiteConfig small(std::vector<std::string> ids, int N = 3, int trials = 3) {
  SuiteConfig c;
  c.N = N;
  c.trials = trials;
  c.identities = std::move(ids);
  return c;
}

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(mix(0) == 0xE220A8397B1DCDAFULL);
  CHECK(fnv("a") == 0xAF63DC4C8601EC8CULL);
  for (int t = 0; t < 5; ++t) {
    const std::uint64_t expected = mix(mix(42 ^ fnv("wff")) + t) >> 1;
    CHECK(cpotts::trial_seed(42, "wff", t) == expected);
  }
  CHECK(cpotts::trial_seed(42, "wff", 0) != cpotts::trial_seed(42, "rothe", 0));
  CHECK(cpotts::trial_seed(42, "wff", 0) < (1ULL << 63));
}

TEST_CASE("registry and config validation") {
  const auto& names = cpotts::registered_identities();
  const std::vector<std::string> expected = {"reflection",      "inversion",     "star-triangle",
                                             "star-triangle-4phi3", "fourier-phi21", "phi21-closed",
                                             "wff",             "shift-recursion", "phi32-transform",
                                             "euler-analog",    "rothe",         "saalschutz",
                                             "binomial-q",      "bilateral-gamma", "transfer-commutation"};
  CHECK(names == expected);
  CHECK(cpotts::resolve_identities(small({"all"})) == expected);
  CHECK(cpotts::resolve_identities(small({"wff", "rothe", "wff"})) == std::vector<std::string>{"wff", "rothe"});

  CHECK_NOTHROW(cpotts::validate_config(small({"all"})));
  CHECK_THROWS_AS(cpotts::validate_config(small({"nope"})), cpotts::InputError);
  CHECK_THROWS_AS(cpotts::validate_config(small({"wff"}, 0)), cpotts::InputError);
  CHECK_THROWS_AS(cpotts::validate_config(small({"wff"}, 3, 0)), cpotts::InputError);
  SuiteConfig bad_tol = small({"wff"});
  bad_tol.tol = 0.0;
  CHECK_THROWS_AS(cpotts::validate_config(bad_tol), cpotts::InputError);
  SuiteConfig big = small({"transfer-commutation"}, 10);
  big.L = 5;
  CHECK_THROWS_AS(cpotts::validate_config(big), cpotts::InputError);
  SuiteConfig k1 = small({"star-triangle"});
  k1.k = 1.0;
  CHECK_THROWS_AS(cpotts::validate_config(k1), cpotts::InputError);
  // Identities that never sample rapidities accept any k.
  k1.identities = {"rothe"};
  CHECK_NOTHROW(cpotts::validate_config(k1));
}

TEST_CASE("complex parsing") {
  CHECK(cpotts::parse_complex("0.6") == cpotts::Complex(0.6, 0.0));
  CHECK(cpotts::parse_complex("0.3,0.1") == cpotts::Complex(0.3, 0.1));
  CHECK_THROWS_AS(cpotts::parse_complex("abc"), cpotts::InputError);
  CHECK(cpotts::parse_complex(cpotts::format_complex(cpotts::Complex(0.1, -2.5))) == cpotts::Complex(0.1, -2.5));
}

TEST_CASE("full suite at N = 2 passes and tallies agree") {
  const auto report = cpotts::run_suite(small({"all"}, 2, 2));
  CHECK(report.all_pass());
  REQUIRE(report.runs.size() == 15);
  const json doc = json::parse(cpotts::report_json(report));
  int total = 0, passed = 0, failed = 0, unasserted = 0;
  for (const auto& r : doc["results"]) {
    ++total;
    const bool asserted = r["asserted"].get<bool>();
    if (!asserted) ++unasserted;
    else if (r["pass"].get<bool>()) ++passed;
    else ++failed;
    CHECK(r.contains("params"));
    CHECK(r["params"].contains("seed"));
    CHECK(r.contains("tolerance"));
  }
  CHECK(doc["summary"]["total"] == total);
  CHECK(doc["summary"]["passed"] == passed);
  CHECK(doc["summary"]["failed"] == failed);
  CHECK(doc["summary"]["unasserted"] == unasserted);
  CHECK(failed == 0);
  CHECK(doc["summary"]["per_identity"].size() == 15);
  CHECK(doc["config"]["N"] == 2);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  SuiteConfig c = small({"star-triangle", "wff", "phi32-transform", "bilateral-gamma"}, 3, 4);
  c.threads = 1;
  const std::string a = cpotts::report_json(cpotts::run_suite(c), false);
  const std::string b = cpotts::report_json(cpotts::run_suite(c), false);
  c.threads = 3;
  const std::string d = cpotts::report_json(cpotts::run_suite(c), false);
  CHECK(a == b);
  CHECK(a == d);
  CHECK(a.find("wall_time") == std::string::npos);
  CHECK(cpotts::report_json(cpotts::run_suite(c)).find("wall_time") != std::string::npos);
}

TEST_CASE("a tiny tolerance fails and the text report says so") {
  SuiteConfig c = small({"star-triangle"}, 3, 2);
  c.tol = 1e-30;
  const auto report = cpotts::run_suite(c);
  CHECK_FALSE(report.all_pass());
  CHECK(report.runs[0].failed() > 0);
  CHECK(report_text(report).find("FAIL") != std::string::npos);
}
