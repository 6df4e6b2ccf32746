#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/rootsys.hpp"

using namespace wr;

namespace {

const ClassicalType kTypes[] = {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D};

// Root count written down independently of the construction.
std::size_t expected_root_count(ClassicalType t, int n) {
  switch (t) {
    case ClassicalType::A: return static_cast<std::size_t>(n * (n + 1));
    case ClassicalType::B:
    case ClassicalType::C: return static_cast<std::size_t>(2 * n * n);
    case ClassicalType::D: return static_cast<std::size_t>(2 * n * (n - 1));
  }
  return 0;
}

}  // namespace

TEST_CASE("root counts and closure under simple reflections") {
  for (auto t : kTypes)
    for (int n = min_rank(t); n <= 7; ++n) {
      RootSystem rs = build_root_system(t, n);
      CHECK(rs.roots.size() == expected_root_count(t, n));
      CHECK(rs.positive_roots.size() * 2 == rs.roots.size());
      CHECK(rs.simple_roots.size() == static_cast<std::size_t>(n));
      for (const auto& a : rs.simple_roots)
        for (const auto& b : rs.roots) {
          CoordVector s = b - a * (2 * dot(a, b) / dot(a, a));
          CHECK(rs.is_root(s));
        }
    }
}

TEST_CASE("positive roots are nonnegative integer combinations of simple roots") {
  for (auto t : kTypes)
    for (int n = min_rank(t); n <= 6; ++n) {
      RootSystem rs = build_root_system(t, n);
      for (const auto& a : rs.positive_roots)
        for (const auto& c : rs.simple_coordinates(a)) {
          CHECK(is_integer(c));
          CHECK(c >= 0);
        }
    }
}

TEST_CASE("rho is half the sum of positive roots and pairs to 1 with simple coroots") {
  for (auto t : kTypes)
    for (int n = min_rank(t); n <= 6; ++n) {
      RootSystem rs = build_root_system(t, n);
      for (const auto& l : rs.dynkin_labels(rs.rho)) CHECK(l == 1);
    }
  CHECK(build_root_system(ClassicalType::D, 4).rho == CoordVector::from_ints({0, 1, 2, 3}));
  CHECK(build_root_system(ClassicalType::B, 2).rho == CoordVector({rat(1, 2), rat(3, 2)}));
  CHECK(build_root_system(ClassicalType::A, 1).rho == CoordVector({rat(-1, 2), rat(1, 2)}));
}

TEST_CASE("type A vectors are traceless") {
  RootSystem rs = build_root_system(ClassicalType::A, 4);
  for (const auto& a : rs.roots) CHECK(a.sum() == 0);
  CHECK(rs.rho.sum() == 0);
  CHECK(rs.ambient_dim == 5);
}

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(build_root_system(ClassicalType::B, 1), RankError);
  CHECK_THROWS_AS(build_root_system(ClassicalType::C, 2), RankError);
  CHECK_THROWS_AS(build_root_system(ClassicalType::D, 3), RankError);
  CHECK_THROWS_AS(build_root_system(ClassicalType::A, 0), RankError);
  RootSystem c2 = build_root_system(ClassicalType::C, 2, true);
  CHECK(c2.permissive);
  CHECK_FALSE(c2.note.empty());
}

TEST_CASE("highest root marks") {
  CHECK(highest_root_marks(build_root_system(ClassicalType::A, 5)) == std::vector<long>{1, 1, 1, 1, 1});
  // alpha_1 is the short root at the right end; the left end carries 1.
  CHECK(highest_root_marks(build_root_system(ClassicalType::B, 4)) == std::vector<long>{2, 2, 2, 1});
  CHECK(highest_root_marks(build_root_system(ClassicalType::C, 4)) == std::vector<long>{1, 2, 2, 2});
  // Fork tips alpha_1, alpha_2 and the far end carry 1.
  CHECK(highest_root_marks(build_root_system(ClassicalType::D, 4)) == std::vector<long>{1, 1, 2, 1});
  CHECK(highest_root_marks(build_root_system(ClassicalType::D, 6)) == std::vector<long>{1, 1, 2, 2, 2, 1});
}

TEST_CASE("highest root dominates every positive root") {
  for (auto t : kTypes)
    for (int n = min_rank(t); n <= 6; ++n) {
      RootSystem rs = build_root_system(t, n);
      CoordVector h = highest_root(rs);
      CHECK(rs.is_dominant(h));
      for (const auto& a : rs.positive_roots)
        for (const auto& c : rs.simple_coordinates(h - a)) CHECK(c >= 0);
    }
}

TEST_CASE("coroot lengths under the realization metric") {
  auto b3 = coroot_lengths(build_root_system(ClassicalType::B, 3));
  CHECK(b3[0] == SqrtValue{2, 2});  // 2 sqrt 2
  CHECK(b3[1] == SqrtValue{2, 1});
  auto c3 = coroot_lengths(build_root_system(ClassicalType::C, 3));
  CHECK(c3[0] == SqrtValue{1, 2});
  CHECK(c3[2] == SqrtValue{2, 1});
  for (const auto& l : coroot_lengths(build_root_system(ClassicalType::A, 3))) CHECK(l == SqrtValue{1, 2});
  for (const auto& l : coroot_lengths(build_root_system(ClassicalType::D, 5))) CHECK(l == SqrtValue{2, 1});
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(8) == SqrtValue{2, 2});
  CHECK(exact_sqrt(rat(1, 8)) == SqrtValue{rat(1, 4), 2});
  CHECK(exact_sqrt(rat(9, 4)) == SqrtValue{rat(3, 2), 1});
  CHECK(exact_sqrt(12) == SqrtValue{2, 3});
}

TEST_CASE("json dump carries the simple roots") {
  auto j = to_json(build_root_system(ClassicalType::C, 3));
  CHECK(j["simple_roots"][0] == nlohmann::json::array({"2/1", "0/1", "0/1"}));
  CHECK(j["root_count"] == 18);
}
