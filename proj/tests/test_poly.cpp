#include <random>

#include "doctest.h"
#include "weylrestrict/errors.hpp"
#include "weylrestrict/poly.hpp"

using namespace wr;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int maxdeg, bool laurent = false) {
  Poly p(nvars, laurent);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (auto& x : e) x = static_cast<int>(rng() % (maxdeg + 1)) - (laurent ? maxdeg / 2 : 0);
    long num = static_cast<long>(rng() % 13) - 6;
    long den = static_cast<long>(rng() % 4) + 1;
    p.add_term(e, rat(num, den));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> x(n);
  for (auto& v : x) v = rat(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
  for (auto& v : x)
    if (v == 0) v = rat(1, 7);
  return x;
}

}  // namespace

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 3, 5, 3), q = random_poly(rng, 3, 4, 2);
    auto x = random_point(rng, 3);
    CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
    CHECK(evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x));
    CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
    CHECK(evaluate(p.pow(3), x) == evaluate(p, x) * evaluate(p, x) * evaluate(p, x));
  }
}

TEST_CASE("zero coefficients are never stored") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y) - x * x + y * y;
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
  CHECK(p.str() == "0");
}

TEST_CASE("canonical text form and round trip") {
  Poly x = Poly::variable(3, 0), z = Poly::variable(3, 2);
  Poly p = x * x * rat(3, 2) - z + Poly::constant(3, 5);
  CHECK(p.str() == "3/2 * x1^2 - 1 * x3^1 + 5");
  CHECK(parse_poly(p.str(), 3) == p);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Poly q = random_poly(rng, 4, 6, 4);
    CHECK(parse_poly(q.str(), 4) == q);
    CHECK(poly_from_json(to_json(q), 4) == q);
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, 3, 4, 3), q = random_poly(rng, 3, 3, 2);
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("exact division reports non-divisibility") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  CHECK_THROWS_AS(exact_divide(x * x + y, x), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(x + y, x - y), NotDivisibleError);
  CHECK(divides(x - y, x * x - y * y));
}

TEST_CASE("Laurent division") {
  // (a^2 - a^{-2}) / (a - a^{-1}) = a + a^{-1}
  Poly num(1, true), den(1, true), expect(1, true);
  num.add_term({2}, 1);
  num.add_term({-2}, -1);
  den.add_term({1}, 1);
  den.add_term({-1}, -1);
  expect.add_term({1}, 1);
  expect.add_term({-1}, 1);
  CHECK(exact_divide(num, den) == expect);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = random_poly(rng, 2, 4, 4, true), q = random_poly(rng, 2, 3, 4, true);
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("mixing kinds or variable counts is rejected") {
  Poly a = Poly::variable(2, 0), b = Poly::variable(3, 0);
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(a * a.as_laurent(), DimensionError);
}

TEST_CASE("substitution and shift agree with evaluation") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = random_poly(rng, 3, 5, 3);
    Poly v0 = random_poly(rng, 3, 2, 2), v2 = random_poly(rng, 3, 3, 1);
    Poly s = substitute(p, {{0, v0}, {2, v2}});
    auto x = random_point(rng, 3);
    std::vector<Rational> y = {evaluate(v0, x), x[1], evaluate(v2, x)};
    CHECK(evaluate(s, x) == evaluate(p, y));

    CoordVector c{rat(1, 2), rat(-3), rat(2, 3)};
    Poly sh = shift(p, c);
    std::vector<Rational> xc = {x[0] + c[0], x[1] + c[1], x[2] + c[2]};
    CHECK(evaluate(sh, x) == evaluate(p, xc));
  }
}

TEST_CASE("Laurent substitution at zero is a pole") {
  Poly p(1, true);
  p.add_term({-1}, 1);
  CHECK_THROWS_AS(substitute(p, {{0, Poly(1)}}), PoleError);
  CHECK_THROWS_AS(evaluate(p, std::vector<Rational>{0}), PoleError);
}

TEST_CASE("signed permutation action: (g.p)(x) = p(g^-1 x)") {
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  SignedPerm swap = SignedPerm::transposition(2, 0, 1);
  CHECK(act_linear(x1 - x2, swap) == x2 - x1);
  SignedPerm flip = SignedPerm::sign_change(2, 0);
  CHECK(act_linear(x1 * x2, flip) == -(x1 * x2));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> img = {0, 1, 2};
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<int> sg = {rng() % 2 ? 1 : -1, rng() % 2 ? 1 : -1, rng() % 2 ? 1 : -1};
    SignedPerm g(img, sg);
    Poly p = random_poly(rng, 3, 5, 3);
    auto x = random_point(rng, 3);
    CoordVector ginvx = g.inverse().apply(CoordVector(x));
    CHECK(evaluate(act_linear(p, g), x) == evaluate(p, ginvx));
    // matrix route
    CHECK(act_linear(p, g.matrix()) == act_linear(p, g));
  }
}

TEST_CASE("singular matrix action is rejected") {
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(1, 0) = 1;
  CHECK_THROWS_AS(act_linear(Poly::variable(2, 0), m), SingularMatrixError);
}

TEST_CASE("restriction to a coordinate prefix") {
  Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  Poly p = x * x + y * z + z;
  Poly r = restrict_prefix(p, 2);
  CHECK(r == Poly::variable(2, 0).pow(2));
  CHECK_THROWS_AS(truncate_vars(p, 2), DimensionError);
  CHECK(extend_vars(r, 3) == x * x);
}

TEST_CASE("signed permutations compose as linear maps") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto make = [&] {
      std::vector<int> img = {0, 1, 2, 3};
      std::shuffle(img.begin(), img.end(), rng);
      std::vector<int> sg(4);
      for (auto& s : sg) s = rng() % 2 ? 1 : -1;
      return SignedPerm(img, sg);
    };
    SignedPerm a = make(), b = make();
    CHECK((a * b).matrix() == a.matrix() * b.matrix());
    CHECK((a * a.inverse()).is_identity());
    CHECK(Rational(a.det()) == a.matrix().determinant());
    CHECK(SignedPerm::from_matrix(a.matrix()) == a);
  }
}
