#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebmellin/bigfloat.hpp"
#include "chebmellin/rational.hpp"

namespace chebmellin {

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

// {"suite":…,"case":…,"status":"pass|fail","detail":…}
std::string to_json_line(const CaseResult& c);

struct SuiteConfig {
  std::optional<unsigned> max_n;  // 0: empty grid
  std::optional<std::vector<Rational>> lambda_grid;
  std::uint64_t seed = 1;
  prec_t precision = 256;
  double tol = 1e-20;
};

struct SuiteRun {
  std::vector<CaseResult> cases;
  std::vector<std::string> warnings;
  unsigned failures() const;
};

// Individual suites in run order ("all" is not listed).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite or "all". `sink` sees every case as it completes.
SuiteRun run_suite(const std::string& name, const SuiteConfig& cfg = {},
                   const std::function<void(const CaseResult&)>& sink = {});

// Seeded fuzz of the seven transforms and Thomae over terminating 3F2(-n, a, b; c, d; 1).
struct TransformFuzzRecord {
  unsigned n = 0;
  std::vector<Rational> params;  // a, b, c, d
  int transform = 0;             // 1..7, 8 for Thomae
  bool applicable = false;
  bool ok = false;
  Rational lhs;
  std::optional<Rational> rhs;   // exact right side when available
  double deviation = 0;          // numeric Thomae comparisons
  std::string json() const;
};
struct TransformFuzzSummary {
  std::vector<TransformFuzzRecord> records;
  unsigned configurations = 0;
  unsigned resampled = 0;
  std::vector<unsigned> exercised;  // per transform 1..8 (index 0 unused)
};
TransformFuzzSummary transform_fuzz(std::uint64_t seed, unsigned configurations, unsigned max_n = 8);

}  // namespace chebmellin
