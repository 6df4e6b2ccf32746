#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/invariants.hpp"

using namespace wr;

namespace {

// Elementary symmetric polynomial of degree m in the given (possibly squared)
// variables, built from subsets.
Poly elementary(std::size_t nvars, int m, bool squared, std::size_t count) {
  Poly sum(nvars);
  for (unsigned mask = 0; mask < (1u << count); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    Exponent e(nvars, 0);
    for (std::size_t j = 0; j < count; ++j)
      if ((mask >> j) & 1) e[j] = squared ? 2 : 1;
    sum.add_term(e, 1);
  }
  return sum;
}

Poly expected_generator(ClassicalType t, int k, int nu) {
  switch (t) {
    case ClassicalType::A: return elementary(k + 1, k + 2 - nu, false, k + 1);
    default: {
      int m = k - nu + 1;
      Poly e = elementary(k, m, true, k);
      return m % 2 ? -e : e;
    }
  }
}

}  // namespace

TEST_CASE("generators match elementary symmetric functions") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int k = 1; k <= 5; ++k) {
      InvariantFamily f = char_poly_family(t, k);
      for (int nu = 1; nu <= static_cast<int>(f.generators.size()); ++nu) {
        if (t == ClassicalType::D && nu == 1) continue;
        CHECK(f.p(nu) == expected_generator(t, k, nu));
      }
    }
}

TEST_CASE("B2 generators") {
  InvariantFamily f = char_poly_family(ClassicalType::B, 2);
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  CHECK(f.p(2) == -(x * x + y * y));
  CHECK(f.p(1) == x * x * y * y);
  CHECK(f.degrees == std::vector<int>{4, 2});
}

TEST_CASE("generator counts and degrees") {
  CHECK(char_poly_family(ClassicalType::A, 3).degrees == std::vector<int>{4, 3, 2, 1});
  CHECK(char_poly_family(ClassicalType::C, 3).degrees == std::vector<int>{6, 4, 2});
  InvariantFamily d4 = char_poly_family(ClassicalType::D, 4);
  CHECK(d4.degrees == std::vector<int>{4, 6, 4, 2});
  CHECK(d4.p(1) == Poly::monomial({1, 1, 1, 1}, 1));
  REQUIRE(d4.det_generator);
  CHECK(*d4.det_generator == d4.p(1) * d4.p(1));
  InvariantFamily d5 = char_poly_family(ClassicalType::D, 5);
  CHECK(*d5.det_generator == -(d5.p(1) * d5.p(1)));
}

TEST_CASE("Reynolds projection fixes invariants and lands in invariants") {
  WeylGroup w(build_root_system(ClassicalType::B, 3));
  InvariantFamily f = char_poly_family(ClassicalType::B, 3);
  for (const auto& p : f.generators) CHECK(reynolds(p, w) == p);
  Poly q = Poly::monomial({4, 2, 0}, 1) + Poly::monomial({1, 1, 0}, 3);
  Poly r = reynolds(q, w);
  CHECK(is_invariant(r, w));
  CHECK(reynolds(r, w) == r);
}

TEST_CASE("restriction identities for A, B, C") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C})
    for (int k = 1; k <= 5; ++k)
      for (int n = 1; n <= k; ++n) {
        auto r = check_surjectivity(t, n, k);
        CHECK_MESSAGE(r.pass, to_json(r).dump());
      }
}

TEST_CASE("A(2,4) restriction pattern") {
  auto r = check_surjectivity(ClassicalType::A, 2, 4);
  CHECK(r.matches == std::vector<std::string>{"0", "0", "p_n,1", "p_n,2", "p_n,3"});
}

TEST_CASE("D parity dichotomy") {
  for (int k = 2; k <= 6; ++k)
    for (int n = 1; n < k; ++n) {
      auto r = check_surjectivity(ClassicalType::D, n, k);
      CHECK_MESSAGE(r.pass, to_json(r).dump());
      CHECK(r.restricted_even);
      CHECK(r.pfaffian_odd);
      CHECK(r.det_identity);
    }
  auto same = check_surjectivity(ClassicalType::D, 4, 4);
  CHECK(same.pass);
}

TEST_CASE("group case") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int r = 2; r <= 3; ++r) {
      auto g = check_group_case(t, r);
      CHECK(g.weyl_ok);
      CHECK(g.invariants_ok);
    }
}
