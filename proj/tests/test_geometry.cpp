#include <random>

#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/geometry.hpp"
#include "weylrestrict/weyl.hpp"

using namespace wr;

namespace {

Rational absq(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Omega* written out coordinate-wise, independent of the orbit construction.
bool star_direct(ClassicalType t, const CoordVector& x) {
  const std::size_t N = x.size();
  switch (t) {
    case ClassicalType::A:
      if (x.sum() != 0) return false;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (absq(x[i] - x[j]) >= rat(1, 2)) return false;
      return true;
    case ClassicalType::B:
    case ClassicalType::C:
      for (const auto& c : x)
        if (absq(c) >= rat(1, 4)) return false;
      return true;
    case ClassicalType::D:
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (absq(x[i] - x[j]) >= rat(1, 4) || absq(x[i] + x[j]) >= rat(1, 4)) return false;
      return true;
  }
  return false;
}

}  // namespace

TEST_CASE("membership examples") {
  RootSystem b3 = build_root_system(ClassicalType::B, 3);
  CHECK(omega_membership(OmegaKind::OmegaStar, b3, CoordVector{rat(1, 8), rat(1, 8), rat(1, 8)}));
  CHECK(!omega_membership(OmegaKind::OmegaStar, b3, CoordVector{rat(1, 4), 0, 0}));
  RootSystem d4 = build_root_system(ClassicalType::D, 4);
  CHECK(!omega_membership(OmegaKind::OmegaStar, d4, CoordVector{rat(1, 8), rat(1, 8), 0, 0}));
  CHECK(omega_membership(OmegaKind::Omega, d4, CoordVector{rat(1, 8), rat(1, 8), 0, 0}));
  RootSystem a2 = build_root_system(ClassicalType::A, 2);
  CHECK(!omega_membership(OmegaKind::Omega, a2, CoordVector{rat(1, 10), 0, 0}));
}

TEST_CASE("orbit construction matches the explicit description") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int r = min_rank(t); r <= 6; ++r) {
      RootSystem rs = build_root_system(t, r);
      HPolytope star = omega_star(rs);
      CHECK(star.symmetric());
      PointSampler s(rs, 11);
      for (int i = 0; i < 300; ++i) {
        CoordVector x = s.next(rat(1, 3));
        CHECK(star.contains(x) == star_direct(t, x));
      }
    }
}

TEST_CASE("Omega* inside Omega") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int r = min_rank(t); r <= 6; ++r) {
      auto rep = check_omega_star_subset(t, r, 1000, 42);
      CHECK_MESSAGE(rep.pass, type_name(t), r);
      CHECK(rep.violations == 0);
      CHECK(rep.star_members > 0);
    }
  CHECK(check_omega_star_subset(ClassicalType::C, 3, 1000, 42).star_equals_omega);
  CHECK(check_omega_star_subset(ClassicalType::A, 2, 1000, 42).star_equals_omega);
}

TEST_CASE("Omega* propagation") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int k = min_rank(t); k <= 6; ++k)
      for (int n = min_rank(t); n <= k; ++n) {
        auto rep = check_omega_star_propagation(make_pair(t, n, k), 500, 7);
        CHECK_MESSAGE(rep.pass, to_json(rep).dump());
      }
  auto a = check_omega_star_propagation(make_pair(ClassicalType::A, 1, 3), 1000, 3);
  CHECK(a.identity_holds);
  CHECK(a.bound_failures == 0);
  // (1/2 - 1/1000)(1, -1)/2 is just inside, (1/2)(1, -1)/2 on the boundary.
  RootSystem a3 = build_root_system(ClassicalType::A, 3);
  auto pair = make_pair(ClassicalType::A, 1, 3);
  CoordVector near{rat(499, 2000), rat(-499, 2000)};
  CHECK(omega_membership(OmegaKind::OmegaStar, a3, pair.embedding.pad(near)));
  CHECK(!omega_membership(OmegaKind::OmegaStar, a3, pair.embedding.pad(CoordVector{rat(1, 4), rat(-1, 4)})));
}

TEST_CASE("Weyl invariance of Omega and Omega*") {
  std::mt19937_64 rng(5);
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    RootSystem rs = build_root_system(t, 4);
    WeylGroup w(rs);
    const auto& els = w.elements();
    HPolytope om = omega(rs), star = omega_star(rs);
    PointSampler s(rs, 9);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int i = 0; i < 200; ++i) {
      CoordVector x = s.next(rat(3, 10));
      const auto& g = els[pick(rng)];
      CHECK(om.contains(x) == om.contains(g.apply(x)));
      CHECK(star.contains(x) == star.contains(g.apply(x)));
    }
  }
}

TEST_CASE("boundary strictness") {
  RootSystem d5 = build_root_system(ClassicalType::D, 5);
  HPolytope star = omega_star(d5);
  CoordVector y{rat(1, 20), rat(1, 30), 0, rat(-1, 40), rat(1, 50)};
  Rational t = star.exit_scale(y);
  CHECK(star.contains(y * (t * rat(999, 1000))));
  CHECK(!star.contains(y * t));
}

TEST_CASE("injectivity radius") {
  const SqrtValue root2{1, 2}, two{2, 1};
  for (int m = 1; m <= 8; ++m) {
    CHECK(injectivity_radius(ClassicalType::A, m).radius == root2);
    CHECK(injectivity_radius(ClassicalType::C, m).radius == root2);
    if (m >= 2) CHECK(injectivity_radius(ClassicalType::B, m).radius == two);
    if (m >= 2) CHECK(injectivity_radius(ClassicalType::D, m).radius == two);
  }
  CHECK(injectivity_radius(ClassicalType::A, 3).str() == "sqrt(2)*pi");
  CHECK(injectivity_radius(ClassicalType::B, 3).str() == "2*pi");
  // so(3) in the B normalization: the single coroot is twice as long as the others.
  CHECK(injectivity_radius(ClassicalType::B, 1).radius == SqrtValue{2, 2});
  CHECK_THROWS_AS(injectivity_radius(ClassicalType::D, 1), RankError);
}

TEST_CASE("support radius bound") {
  // B: box |x| < 1/4 with metric 2 dot, distance sqrt(2)/4.
  CHECK(support_radius_bound(ClassicalType::B, 3) == SqrtValue{rat(1, 4), 2});
  // A: |x_i - x_j| < 1/2 with the standard metric, distance 1/(2 sqrt 2).
  CHECK(support_radius_bound(ClassicalType::A, 3) == SqrtValue{rat(1, 4), 2});
  // D: |x_i + x_j| < 1/4 with metric 2 dot: (1/4) sqrt(2) / sqrt(2) = 1/4.
  CHECK(support_radius_bound(ClassicalType::D, 4) == SqrtValue{rat(1, 4), 1});
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    CHECK(sqrt_less(support_radius_bound(t, 4), injectivity_radius(t, 4).radius));
}
