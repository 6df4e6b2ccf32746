// Acceptance run: one PASS/FAIL line per criterion, each timed against its
// budget.  Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "weylrestrict/suite.hpp"

using namespace wr;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string filter;
  SuiteParams params;
  double budget_seconds;
  std::size_t min_checks;
};

SuiteParams grid(int max_rank, std::size_t samples = 1000, int trials = 20) {
  SuiteParams p;
  p.max_rank = max_rank;
  p.samples = samples;
  p.trials = trials;
  p.seed = 1;
  return p;
}

std::vector<Criterion> criteria() {
  return {
      {1, "Weyl restriction, A/B/C, n < k <= 5", "restriction/*", grid(5), 10, 30},
      {2, "type D strictness, (4,5) (4,6) (5,6)", "d-strictness/*", grid(4), 30, 3},
      {3, "invariant restriction identities, k <= 6", "invariants/*", grid(6), 20, 60},
      {4, "Pfaffian exclusion by parity", "pfaffian/*", grid(6), 5, 15},
      {5, "injectivity radii, ranks 1..8", "radius/*", grid(4), 1, 4},
      {6, "Omega* inside Omega and Omega* propagation", "omega-*", grid(6, 1000), 60, 20},
      {7, "class-one weights and their restriction, k <= 6", "xi/*", grid(6), 5, 50},
      {8, "Weyl dimension against Freudenthal, rank <= 4", "dimension/*", grid(4), 60, 15},
      {9, "branching multiplicity one, k <= 3", "branching/*", grid(3), 120, 10},
      {10, "PW operators: vanishing, round trip, projective, coefficients",
       "pw-vanishing/*|pw-projective/*|pw-coeff/*", grid(4, 1000, 20), 60, 40},
      {11, "sigma-equivariance for D4", "sigma/D4/*", grid(4), 30, 3},
      {12, "negative example, B3 without alpha_1", "negative-example/*", grid(4), 5, 1},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : criteria()) {
    if (only && c.number != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::string error;
    try {
      reports = run_suite(c.filter, c.params);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<std::string> bad;
    for (const auto& r : reports)
      if (r.status == Status::Fail) bad.push_back(r.id);
    bool in_budget = secs < c.budget_seconds;
    bool enough = reports.size() >= c.min_checks;
    bool pass = error.empty() && bad.empty() && in_budget && enough;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  " << c.title << "  ("
              << reports.size() << " checks, " << bad.size() << " failed, " << std::fixed << std::setprecision(2)
              << secs << "s of " << std::setprecision(0) << c.budget_seconds << "s)\n";
    if (!error.empty()) std::cout << "      error: " << error << "\n";
    if (!in_budget) std::cout << "      over the time budget\n";
    if (!enough) std::cout << "      expected at least " << c.min_checks << " checks\n";
    for (const auto& r : reports)
      if (r.status == Status::Fail) {
        std::cout << "      " << r.id << ": " << r.summary << "\n";
        std::cout << "        witness " << r.witness.dump() << "\n";
      }
  }
  return failed == 0 ? 0 : 1;
}
