#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/poly.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/rootsys.hpp"
#include "weylrestrict/signed_perm.hpp"

namespace wr {

using WeightMultiset = std::map<CoordVector, long>;

inline constexpr std::size_t kDefaultWeightCap = 200'000;

// pi(v) = prod over positive roots of <v, a>.
Rational varpi(const RootSystem& rs, const CoordVector& v);

// WeightError unless mu is dominant and integral.
void require_dominant_integral(const RootSystem& rs, const CoordVector& mu);

// pi(mu + rho) / pi(rho).
long weyl_dim(const RootSystem& rs, const CoordVector& mu);

// Weight for Dynkin labels (fundamental weight coordinates).
CoordVector weight_from_labels(const RootSystem& rs, const std::vector<long>& labels);

// W-orbit of a vector, sorted.
std::vector<CoordVector> weyl_orbit(const RootSystem& rs, const CoordVector& v);
// The dominant element of the orbit of v.
CoordVector dominant_representative(const RootSystem& rs, const CoordVector& v);

// Dominant weights of the irreducible module with highest weight mu, with
// multiplicities from Freudenthal's recursion.
WeightMultiset dominant_multiplicities(const RootSystem& rs, const CoordVector& mu,
                                       std::size_t cap = kDefaultWeightCap);
// All weights.  CapExceededError once more than cap weights are produced.
WeightMultiset freudenthal_weights(const RootSystem& rs, const CoordVector& mu, std::size_t cap = kDefaultWeightCap);
long total_multiplicity(const WeightMultiset& m);

struct BranchResult {
  WeightMultiset components;  // highest weight of the small group -> multiplicity
  long large_dim = 0;
  long bookkeeping = 0;       // sum of mult * small dim
  std::vector<CoordVector> order;  // highest weights in the order they were peeled off
};

// Restrict the weights of V(mu) along the pair and peel off irreducible
// characters of the small group, highest first: largest <nu, rho_small>, ties
// broken by the lexicographically largest coordinates.
// BranchingError on a negative intermediate multiplicity.
BranchResult branch(const PropagationPair& pair, const CoordVector& mu, std::size_t cap = kDefaultWeightCap);
nlohmann::json to_json(const BranchResult& b);

// Characters live on the doubled exponent lattice: the monomial with exponent
// e stands for a^{e/2}.  For type A the gl lift mu - mu_1 (1, ..., 1) is used so
// every exponent is an integer.
Poly weyl_numerator(const RootSystem& rs, const CoordVector& lambda);  // sum det(w) a^{w lambda}
Poly weyl_denominator(const RootSystem& rs);                           // prod (a^{a/2} - a^{-a/2})
Poly weyl_character(const RootSystem& rs, const CoordVector& mu);
Rational character_dimension(const Poly& chi);  // sum of coefficients

struct SigmaReport {
  int rank = 0;
  CoordVector lambda;
  CoordVector sigma_lambda;
  bool sigma_fixes_lambda = false;
  bool sigma_permutes_positive_roots = false;
  bool sigma_swaps_first_simple_roots = false;
  bool identity_holds = false;      // N_lambda(s^-1 a) D(a) = N_{s lambda}(a) D(s^-1 a)
  // The same identity with N_lambda in place of N_{s lambda}.  Expected to fail
  // whenever s lambda is not in the W-orbit of lambda.
  bool control_applicable = false;
  bool control_identity_holds = false;
  bool pass = false;
};

// D_r with sigma the sign change of f_1; lambda is in ambient coordinates
// (usually rho + mu).
SigmaReport check_sigma_equivariance(int rank, const CoordVector& lambda, bool permissive = true);
nlohmann::json to_json(const SigmaReport& r);

nlohmann::json to_json(const WeightMultiset& m);

}  // namespace wr
