#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/embedding.hpp"
#include "weylrestrict/poly.hpp"
#include "weylrestrict/weyl.hpp"

namespace wr {

// F_k(t, X) as a polynomial in ambient_dim + 1 variables, t last:
//   A: prod (t + x_j)        B: t prod (t^2 - x_j^2)        C, D: prod (t^2 - x_j^2)
Poly char_poly(ClassicalType t, int rank);

// Generators p_{k,1}, ..., read off as coefficients of F_k.  For type D the
// first generator is the Pfaffian x_1 ... x_k (stored with sign +1); its
// square equals (-1)^k times the constant term of F_k, which is kept as
// det_generator.
struct InvariantFamily {
  ClassicalType type{};
  int rank = 0;
  std::size_t nvars = 0;
  std::vector<Poly> generators;  // index nu-1
  std::vector<int> degrees;
  std::optional<Poly> det_generator;

  const Poly& p(int nu) const { return generators.at(static_cast<std::size_t>(nu - 1)); }
};

// Generators are checked invariant under the Weyl group generators;
// InvarianceError otherwise.
InvariantFamily char_poly_family(ClassicalType t, int rank, bool permissive = true);

std::vector<Poly> restrict_family(const InvariantFamily& fam, const Embedding& emb);

bool is_invariant(const Poly& p, const WeylGroup& w);
Poly reynolds(const Poly& p, const WeylGroup& w);

struct SurjectivityReport {
  ClassicalType type{};
  int n = 0, k = 0;
  // One entry per large generator p_{k,nu}: what its restriction matched.
  std::vector<std::string> matches;
  bool identities_hold = false;
  // Type D only.
  bool restricted_even = false;     // every restricted generator is fixed by each sign change
  bool pfaffian_odd = false;        // p_{n,1} changes sign under a sign change
  bool det_identity = false;        // p_{k,k-n+1}| = (-1)^n p_{n,1}^2 = det generator
  bool surjective = false;          // onto I(h_n) for A/B/C, onto its even part for D
  bool pass = false;
};

SurjectivityReport check_surjectivity(ClassicalType t, int n, int k);
nlohmann::json to_json(const SurjectivityReport& r);
nlohmann::json to_json(const InvariantFamily& f);

// Group case: h = a + a with W x W acting blockwise and the diagonal as
// Cartan subspace.  Checks that the restricted stabilizer is W and that the
// restricted generators of I(h) give those of I(a).
struct GroupCaseReport {
  ClassicalType type{};
  int rank = 0;
  std::size_t stabilizer_order = 0;
  std::size_t restricted_order = 0;
  bool weyl_ok = false;
  bool invariants_ok = false;
};

GroupCaseReport check_group_case(ClassicalType t, int rank, bool extended = false);

}  // namespace wr
