#include "doctest.h"
#include "harmonia/suite.hpp"

using namespace harmonia;

namespace {

RunConfig config(std::string suite, std::uint64_t seed = 3, std::uint64_t n = 4) {
  RunConfig c;
  c.suite = std::move(suite);
  c.seed = seed;
  c.instances = n;
  return c;
}

ErrorCode validate_code(const RunConfig& c) {
  try {
    validate(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("random suites pass and are deterministic") {
  for (const char* s : {"harmonicity", "curves", "polarity", "ruled", "pappus-equipal"}) {
    CAPTURE(s);
    auto a = run_suite(config(s));
    CHECK(a.exit_code() == 0);
    CHECK_FALSE(a.properties.empty());
    for (const auto& p : a.properties) CHECK(p.instances == 4);
    CHECK(run_suite(config(s)).text() == a.text());
    CHECK(run_suite(config(s)).json() == a.json());
  }
}

TEST_CASE("finite field runs") {
  auto c = config("curves", 11, 3);
  c.field = Field::prime(11);
  auto r = run_suite(c);
  CHECK(r.exit_code() == 0);
  for (const auto& p : r.properties) CHECK(p.name != "circle");
  c.suite = "pappus-equipal";
  CHECK(run_suite(c).exit_code() == 0);
}

TEST_CASE("instance pinning") {
  auto c = config("harmonicity", 9, 1);
  c.instance = 17;
  auto r = run_suite(c);
  for (const auto& p : r.properties) CHECK(p.instances == 1);
  CHECK(r.text().find("instances=#17") != std::string::npos);
}

TEST_CASE("fano plane is an expected failure") {
  auto c = config("finite");
  c.p = 2;
  auto r = run_suite(c);
  CHECK(r.exit_code() == 3);
  int expected = 0;
  for (const auto& p : r.properties) {
    if (p.status != Status::fail) continue;
    CHECK(p.expected);
    CHECK(p.name.find("axiom-5") != std::string::npos);
    REQUIRE(p.witnesses.size() == 1);
    CHECK(p.witnesses[0].indices.size() == 9);
    CHECK(p.witnesses[0].detail.find("Fano") != std::string::npos);
    ++expected;
  }
  CHECK(expected == 2);
  auto j = r.json();
  CHECK(j["exit_code"] == 3);
  CHECK(r.text().find("expected-failure") != std::string::npos);
}

TEST_CASE("finite suite with a chosen prime") {
  auto c = config("finite");
  c.p = 5;
  auto r = run_suite(c);
  CHECK(r.exit_code() == 0);
  for (const auto& p : r.properties) CHECK(p.name.rfind("PG(2,5)", 0) == 0);
  c.p = 7;
  c.budget.pappus_p = 5;
  CHECK(run_suite(c).exit_code() == 0);
}

TEST_CASE("timings only on request") {
  auto c = config("harmonicity", 1, 2);
  auto r = run_suite(c);
  CHECK_FALSE(r.json()["properties"][0].contains("seconds"));
  c.timings = true;
  auto t = run_suite(c);
  CHECK(t.json()["properties"][0].contains("seconds"));
  CHECK(t.text().find("s\n") != std::string::npos);
}

TEST_CASE("config validation") {
  CHECK(validate_code(config("nope")) == ErrorCode::ConfigInvalid);
  CHECK(validate_code(config("all", 1, 0)) == ErrorCode::ConfigInvalid);
  auto c = config("curves");
  c.field = Field::prime(2);
  CHECK(validate_code(c) == ErrorCode::ConfigInvalid);
  c.suite = "finite";
  CHECK(validate_code(c) == ErrorCode::ParseError);
  c.p = 9;
  CHECK(validate_code(c) == ErrorCode::ConfigInvalid);
  CHECK(suite_names().back() == "all");
}
