#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/rootsys.hpp"

namespace wr {

inline constexpr const char* kReportSchema = "weyl-restrict/1";

struct UnknownCheckError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct VerificationReport {
  std::string id;
  nlohmann::json params;
  Status status = Status::Pass;
  std::string summary;      // one line: skip reason, failure summary or headline result
  nlohmann::json witness;   // counterexample on FAIL, constructive data otherwise
  std::uint64_t seed = 0;
  double seconds = 0;       // wall time; left out of the JSON
};

// Options shared by every check.  Unset type/n/k/rank mean "the whole grid";
// a given n and k replace the grid of pairs, a given rank the grid of ranks.
struct SuiteParams {
  int max_rank = 4;
  std::size_t samples = 1000;
  int trials = 20;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::optional<ClassicalType> type;
  std::optional<int> n, k, rank;
  std::optional<std::vector<long>> lambda;  // sigma check, ambient coordinates
};

struct CheckSpec {
  std::string id;
  nlohmann::json params;
  std::function<VerificationReport()> run;
};

// Every check of the matrix for the given parameters, sorted by id.
std::vector<CheckSpec> build_matrix(const SuiteParams& p);

// Checks whose id matches any of the '|' separated globs.  UnknownCheckError
// when nothing matches.
std::vector<CheckSpec> select_checks(const std::vector<CheckSpec>& all, const std::string& filter);

// Runs the checks on a worker pool; the result is ordered by check id.
std::vector<VerificationReport> run_checks(const std::vector<CheckSpec>& checks, unsigned threads = 0);
std::vector<VerificationReport> run_suite(const std::string& filter, const SuiteParams& p);

bool any_failed(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json suite_json(const std::vector<VerificationReport>& reports, const SuiteParams& p,
                          const std::string& command);
std::string suite_table(const std::vector<VerificationReport>& reports, bool with_timing = true);

}  // namespace wr
