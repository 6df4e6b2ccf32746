#include <fstream>

#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/propagation.hpp"

using namespace wr;

namespace {

// Textbook fundamental weights in this numbering, doubled.
std::vector<CoordVector> doubled_fundamental(ClassicalType t, int r) {
  const int N = t == ClassicalType::A ? r + 1 : r;
  auto tail = [&](int from) {  // f_from + ... + f_N, 1-based
    CoordVector v(N);
    for (int i = from; i <= N; ++i) v[i - 1] = 1;
    return v;
  };
  std::vector<CoordVector> out;
  for (int j = 1; j <= r; ++j) {
    CoordVector w(N);
    switch (t) {
      case ClassicalType::A: w = tail(j + 1) - tail(1) * rat(N - j, N); break;
      case ClassicalType::B: w = j == 1 ? tail(1) * rat(1, 2) : tail(j); break;
      case ClassicalType::C: w = tail(j); break;
      case ClassicalType::D:
        if (j == 1) w = tail(1) * rat(1, 2);
        else if (j == 2) w = (tail(1) - CoordVector::unit(N, 0, 2)) * rat(1, 2);
        else w = tail(j);
        break;
    }
    out.push_back(w * 2);
  }
  return out;
}

}  // namespace

TEST_CASE("make_pair simple root identity") {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int k = 1; k <= 6; ++k)
      for (int n = 1; n <= k; ++n) {
        if (t == ClassicalType::D && n == 1) continue;
        auto p = make_pair(t, n, k);
        for (int j = 0; j < n; ++j) CHECK(p.restrict_weight(p.large.simple_roots[j]) == p.small.simple_roots[j]);
      }
  auto b = make_pair(ClassicalType::B, 2, 4);
  CHECK(b.small.simple_roots[0] == CoordVector::from_ints({1, 0}));
  auto d = make_pair(ClassicalType::D, 4, 6);
  CHECK(d.restrict_weight(d.large.simple_roots[1]) == CoordVector::from_ints({-1, 1, 0, 0}));
  auto same = make_pair(ClassicalType::A, 3, 3);
  CHECK(same.small.roots == same.large.roots);
  CHECK_THROWS_AS(make_pair(ClassicalType::B, 4, 2), RankError);
  CHECK(make_product_pairs({{ClassicalType::A, 1, 2}, {ClassicalType::C, 2, 3}}).size() == 2);
}

TEST_CASE("catalog rows") {
  auto bdi = catalog_lookup(Family::BDI, 3, 5);
  CHECK(bdi.rank == 3);
  CHECK(bdi.dim == 15);
  CHECK(bdi.sigma_half_type == ClassicalType::B);
  auto ai = catalog_lookup(Family::AI, 4);
  CHECK(ai.rank == 3);
  CHECK(ai.dim == 9);
  CHECK(catalog_lookup(Family::CII, 1, 3).nonreduced);
  CHECK(catalog_lookup(Family::CII, 1, 3).sigma_two_type == ClassicalType::C);
  CHECK(!catalog_lookup(Family::CII, 2, 2).nonreduced);
  CHECK(catalog_lookup(Family::DIII, 5).nonreduced);
  CHECK(catalog_lookup(Family::DIII, 4).sigma_half_type == ClassicalType::C);
  CHECK(catalog_lookup(Family::BDI, 4, 4).sigma_half_type == ClassicalType::D);
  CHECK_THROWS(catalog_lookup(Family::BDI, 1, 1));
  CHECK_THROWS(parse_family("EIII"));
  CHECK(parse_family("bdi") == Family::BDI);
  CHECK(parse_family("A_j") == Family::A);
}

TEST_CASE("catalog formulas for parameters up to 6") {
  for (int j = 2; j <= 6; ++j) {
    CHECK(catalog_lookup(Family::A, j).dim == j * j - 1);
    CHECK(catalog_lookup(Family::B, j).dim == 2 * j * j + j);
    CHECK(catalog_lookup(Family::D, j).dim == 2 * j * j - j);
    CHECK(catalog_lookup(Family::C, j).dim == 2 * j * j + j);
    CHECK(catalog_lookup(Family::AI, j).dim == (j - 1) * (j + 2) / 2);
    CHECK(catalog_lookup(Family::AII, j).dim == 2 * j * j - j - 1);
    CHECK(catalog_lookup(Family::DIII, j).dim == j * (j - 1));
    CHECK(catalog_lookup(Family::DIII, j).rank == j / 2);
    CHECK(catalog_lookup(Family::CI, j).dim == j * (j + 1));
    CHECK(catalog_lookup(Family::A, j).rank == j - 1);
  }
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      int r = std::min(p, q);
      CHECK(catalog_lookup(Family::AIII, p, q).dim == 2 * p * q);
      CHECK(catalog_lookup(Family::CII, p, q).dim == 4 * p * q);
      CHECK(catalog_lookup(Family::AIII, p, q).rank == r);
      CHECK(catalog_lookup(Family::AIII, p, q).nonreduced == (p != q));
      if (p + q >= 3) {
        CHECK(catalog_lookup(Family::BDI, p, q).dim == p * q);
        CHECK(!catalog_lookup(Family::BDI, p, q).nonreduced);
      }
    }
}

TEST_CASE("shipped catalog file matches the built-in resource") {
  std::ifstream in(WR_SOURCE_DIR "/data/catalog.json");
  REQUIRE(in.good());
  auto shipped = nlohmann::json::parse(in);
  CHECK(shipped == catalog_resource());
  CHECK(shipped["families"].size() == 11);
  CHECK(shipped["limits"].size() == 13);
}

TEST_CASE("sigma_two and sigma_half") {
  std::vector<CoordVector> bc1{CoordVector::from_ints({1}), CoordVector::from_ints({-1}), CoordVector::from_ints({2}),
                               CoordVector::from_ints({-2})};
  auto s2 = sigma_two(bc1);
  CHECK(s2 == std::vector<CoordVector>{CoordVector::from_ints({-2}), CoordVector::from_ints({2})});
  auto c1 = classify(s2);
  REQUIRE(c1);
  CHECK(c1->type == ClassicalType::C);
  auto c2 = classify(sigma_two(bc_roots(2)));
  REQUIRE(c2);
  CHECK(c2->type == ClassicalType::C);
  CHECK(c2->rank == 2);
  auto b2 = classify(sigma_half(bc_roots(2)));
  REQUIRE(b2);
  CHECK(b2->type == ClassicalType::B);
  RootSystem b3 = build_root_system(ClassicalType::B, 3);
  CHECK(sigma_two(b3.roots) == b3.roots);
  CHECK(classify(b3.roots)->type == ClassicalType::B);
  CHECK(sigma_two_system(catalog_lookup(Family::AIII, 2, 5)).type == ClassicalType::C);
}

TEST_CASE("class-one weights") {
  auto b2 = class_one_weights(build_root_system(ClassicalType::B, 2));
  CHECK(b2[0] == CoordVector::from_ints({1, 1}));
  CHECK(b2[1] == CoordVector::from_ints({0, 2}));
  auto c2 = class_one_weights(build_root_system(ClassicalType::C, 2, true));
  CHECK(c2[0] == CoordVector::from_ints({2, 2}));
  CHECK(c2[1] == CoordVector::from_ints({0, 2}));
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int r = 2; r <= 6; ++r) {
      if (t == ClassicalType::D && r < 2) continue;
      RootSystem rs = build_root_system(t, r, true);
      CHECK(class_one_weights(rs) == doubled_fundamental(t, r));
      auto fw = fundamental_weights(rs);
      for (int j = 0; j < r; ++j) CHECK(fw[j] * 2 == class_one_weights(rs)[j]);
    }
}

TEST_CASE("semilattice membership") {
  RootSystem b2 = build_root_system(ClassicalType::B, 2);
  auto xi = class_one_weights(b2);
  auto in = class_one_coordinates(b2, xi[0] * 2 + xi[1]);
  REQUIRE(in);
  CHECK(*in == std::vector<long>{2, 1});
  CHECK(!class_one_coordinates(b2, xi[0] * rat(1, 2)));
  CHECK(class_one_weight(b2, {2, 1}) == xi[0] * 2 + xi[1]);
}

TEST_CASE("xi restriction") {
  auto b = make_pair(ClassicalType::B, 2, 3);
  auto xl = class_one_weights(b.large);
  CHECK(xl[0] == CoordVector::from_ints({1, 1, 1}));
  CHECK(b.restrict_weight(xl[0]) == CoordVector::from_ints({1, 1}));
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int k = 2; k <= 6; ++k)
      for (int n = 1; n <= k; ++n) {
        if (t == ClassicalType::D && n < 2) continue;
        auto r = check_xi_restriction(make_pair(t, n, k));
        CHECK_MESSAGE(r.pass, to_json(r).dump());
      }
}

TEST_CASE("rho with multiplicities") {
  RootSystem b2 = build_root_system(ClassicalType::B, 2);
  CHECK(rho_with_multiplicities(b2, {}) == b2.rho);
  std::map<CoordVector, long> m;
  for (const auto& a : b2.positive_roots) m[a] = 2;
  CHECK(rho_with_multiplicities(b2, m) == b2.rho * 2);
}
