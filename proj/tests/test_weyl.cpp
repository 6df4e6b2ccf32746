#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/weyl.hpp"

using namespace wr;

namespace {

// Direct description: permutations times sign patterns, filtered by type.
std::vector<SignedPerm> direct_group(ClassicalType t, int n, bool extended) {
  int N = t == ClassicalType::A ? n + 1 : n;
  std::vector<int> img(N);
  std::iota(img.begin(), img.end(), 0);
  std::vector<SignedPerm> out;
  do {
    for (int mask = 0; mask < (1 << N); ++mask) {
      int neg = __builtin_popcount(static_cast<unsigned>(mask));
      if (t == ClassicalType::A && mask) continue;
      if (t == ClassicalType::D && !extended && neg % 2) continue;
      std::vector<int> sg(N);
      for (int i = 0; i < N; ++i) sg[i] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(img, sg);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

const ClassicalType kTypes[] = {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D};

}  // namespace

TEST_CASE("closure of simple reflections equals the direct description") {
  for (auto t : kTypes)
    for (int n = 1; n <= 5; ++n)
      for (bool ext : {false, true}) {
        WeylGroup w(build_root_system(t, n, true), ext);
        CHECK(w.elements() == direct_group(t, n, ext));
        CHECK(w.elements().size() == w.predicted_order());
      }
}

TEST_CASE("group orders") {
  CHECK(weyl_order(ClassicalType::A, 4) == 120);
  CHECK(weyl_order(ClassicalType::B, 3) == 48);
  CHECK(weyl_order(ClassicalType::C, 4) == 384);
  CHECK(weyl_order(ClassicalType::D, 4) == 192);
  CHECK(weyl_order(ClassicalType::D, 4, true) == 384);
}

TEST_CASE("every element permutes the roots and the structural test agrees") {
  for (auto t : kTypes) {
    int n = min_rank(t) + 1;
    RootSystem rs = build_root_system(t, n);
    WeylGroup w(rs);
    std::set<CoordVector> roots(rs.roots.begin(), rs.roots.end());
    for (const auto& g : w.elements()) {
      CHECK(w.contains(g));
      std::set<CoordVector> image;
      for (const auto& a : rs.roots) image.insert(g.apply(a));
      CHECK(image == roots);
    }
  }
  WeylGroup d4(build_root_system(ClassicalType::D, 4));
  CHECK_FALSE(d4.contains(SignedPerm::sign_change(4, 0)));
  CHECK(WeylGroup(build_root_system(ClassicalType::D, 4), true).contains(SignedPerm::sign_change(4, 0)));
}

TEST_CASE("reflections") {
  RootSystem b2 = build_root_system(ClassicalType::B, 2);
  SignedPerm s = reflection(b2, b2.simple_roots[0]);
  CHECK(s == SignedPerm::sign_change(2, 0));
  CHECK_THROWS_AS(reflection(b2, CoordVector::from_ints({1, 2})), NotARootError);
}

TEST_CASE("enumeration cap") {
  WeylGroup b8(build_root_system(ClassicalType::B, 8));
  CHECK_THROWS_AS(b8.elements(1000), CapExceededError);
}

TEST_CASE("restriction theorem for A, B, C at small rank") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C})
    for (int k = 2; k <= 4; ++k)
      for (int n = 1; n < k; ++n) {
        auto r = check_restriction_theorem(t, n, k);
        CHECK_MESSAGE(r.pass, to_json(r).dump());
        CHECK(r.restricted_order == weyl_order(t, n));
      }
}

TEST_CASE("type D restriction is index two over W(D_n)") {
  auto r = check_restriction_theorem(ClassicalType::D, 4, 5);
  CHECK(r.pass);
  CHECK(r.restricted_order == 384);
  CHECK(r.d_equals_extended);
  CHECK_FALSE(r.equals_small_group);
  auto e = check_restriction_theorem(ClassicalType::D, 4, 5, true);
  CHECK(e.pass);
  CHECK(e.equals_small_group);
}

TEST_CASE("stabilizer orders and kernel bookkeeping") {
  // Stabilizer of R^2 in W(B_3): signed perms of {1,2} times signs on {3}.
  WeylGroup b3(build_root_system(ClassicalType::B, 3));
  auto sr = stabilizer_restriction(b3, make_embedding(2, 3));
  CHECK(sr.subgroup_order == 16);
  CHECK(sr.kernel_order == 2);
  CHECK(sr.restricted.size() == 8);
}

TEST_CASE("removing a node far from the end leaves -id on an A factor") {
  // B3 without alpha_1: the remaining A2 picks up -id from W(B3).
  auto r = check_levi_restriction(ClassicalType::B, 3, {1});
  CHECK_FALSE(r.equal);
  CHECK(r.restricted_order == 12);
  CHECK(r.small_weyl_order == 6);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].simply_laced_chain);
  CHECK(r.components[0].minus_identity_in_restriction);
}

TEST_CASE("removing the node next to the short end keeps equality") {
  // B3 without alpha_2 leaves B1 x A1, where -id already lies in each factor.
  auto r = check_levi_restriction(ClassicalType::B, 3, {2});
  CHECK(r.equal);
  CHECK(r.restricted_order == 4);
}

TEST_CASE("type A Levi with two isomorphic factors") {
  // A3 without alpha_2: the factor swap survives restriction.
  auto r = check_levi_restriction(ClassicalType::A, 3, {2});
  CHECK(r.small_weyl_order == 4);
  CHECK(r.restricted_order == 8);
  CHECK_FALSE(r.equal);
  auto r1 = check_levi_restriction(ClassicalType::A, 3, {1});
  CHECK(r1.equal);
}
