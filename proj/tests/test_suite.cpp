#include "doctest.h"

#include <algorithm>
#include <set>

#include "weylrestrict/suite.hpp"

using namespace wr;

TEST_CASE("matrix ids are unique and sorted") {
  auto all = build_matrix(SuiteParams{});
  std::set<std::string> ids;
  for (const auto& c : all) ids.insert(c.id);
  CHECK(ids.size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(ids.count("negative-example/B3") == 1);
  CHECK(ids.count("d-strictness/D/4-6") == 1);
}

TEST_CASE("explicit n and k replace the grid") {
  SuiteParams p;
  p.type = ClassicalType::D;
  p.n = 4;
  p.k = 5;
  auto sel = select_checks(build_matrix(p), "invariants/*|pfaffian/*");
  REQUIRE(sel.size() == 2);
  CHECK(sel[0].id == "invariants/D/4-5");
  CHECK(sel[1].id == "pfaffian/D/4-5");
}

TEST_CASE("unknown filters are rejected") {
  CHECK_THROWS_AS(select_checks(build_matrix(SuiteParams{}), "nothing/*"), UnknownCheckError);
}

TEST_CASE("thread count does not change the report") {
  SuiteParams p;
  p.samples = 100;
  p.trials = 4;
  p.seed = 9;
  p.threads = 1;
  auto a = suite_json(run_suite("omega-*|pw-vanishing/*|xi/*", p), p, "x");
  p.threads = 4;
  auto b = suite_json(run_suite("omega-*|pw-vanishing/*|xi/*", p), p, "x");
  CHECK(a.dump() == b.dump());
  CHECK(a["schema"] == "weyl-restrict/1");
}

TEST_CASE("failures carry witnesses") {
  SuiteParams p;
  p.type = ClassicalType::B;
  auto r = run_suite("branching/B/1-2", p);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Fail);
  CHECK(r[0].witness.contains("weights"));
  CHECK(any_failed(r));
}

TEST_CASE("out of family ranks are skipped, not failed") {
  SuiteParams p;
  p.type = ClassicalType::D;
  p.rank = 2;
  auto r = run_suite("radius/*", p);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Skipped);
}
