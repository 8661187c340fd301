#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace knotzeros {

enum class Suite { Paper, Quick };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  Suite suite = Suite::Paper;
  std::uint64_t seed = 20260101;
};

enum class Status { Pass, Fail, Skip };

struct CheckResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0.0;
};

constexpr int kCriterionCount = 10;

CheckResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

/// One `PASS|FAIL|SKIP  <id>  <name>  (<detail>)` line per result.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace knotzeros
