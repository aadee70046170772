#pragma once

// Seeded verification suites. Instance i of a property draws from
// Rng::for_instance(seed mixed with the property name, i), so any failing
// instance can be replayed alone with RunConfig::instance.

#include <optional>
#include <string>
#include <vector>

#include "harmonia/finite.hpp"
#include "harmonia/scene.hpp"

namespace harmonia {

struct RunConfig {
  std::uint64_t seed = 1;
  std::string suite = "all";
  Field field = Field::rational();
  std::uint64_t instances = 20;
  std::optional<std::uint64_t> instance;
  /// Finite suite: PG(2, p) and, within budget, PG(3, p). Default models
  /// are PG(2,3), PG(2,5), PG(3,3).
  std::optional<std::uint32_t> p;
  Budget budget;
  bool timings = false;
};

struct Failure {
  std::uint64_t instance = 0;
  std::string detail;
  Scene scene;
  std::vector<std::int64_t> indices;
};

struct PropertyResult {
  std::string suite, name;
  Status status = Status::pass;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// Failure predicted by the model, e.g. the harmonic axiom in
  /// characteristic 2.
  bool expected = false;
  std::vector<Failure> witnesses;
  double seconds = 0;
};

struct Report {
  RunConfig config;
  std::vector<PropertyResult> properties;

  /// 0 all pass, 1 some property failed, 3 only expected failures.
  int exit_code() const;
  std::string text() const;
  nlohmann::json json() const;
};

const std::vector<std::string>& suite_names();
/// Throws ConfigInvalid.
void validate(const RunConfig& cfg);
Report run_suite(const RunConfig& cfg);

}  // namespace harmonia
