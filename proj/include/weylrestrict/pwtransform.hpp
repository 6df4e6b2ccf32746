#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/poly.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/rootsys.hpp"
#include "weylrestrict/weyl.hpp"

namespace wr {

// Polynomials here are functions of lambda in ambient coordinates (one
// variable per f_j).

// pi(lambda) = prod over positive roots of <lambda, a>, as a polynomial.
Poly varpi_poly(const RootSystem& rs);

// eps(w) with pi(w mu) = eps(w) pi(mu).  Equals det(w) on W; an odd sign
// change in the extended D group fixes pi, so eps = +1 there.
int alternating_sign(const RootSystem& rs, const SignedPerm& w);

// Phi with Phi(w(lambda + rho) - rho) = eps(w) Phi(lambda) for the group
// generators.  psi(mu) = Phi(mu - rho) is kept alongside; it is alternating.
struct RhoAltPoly {
  RootSystem rs;
  bool extended = false;
  Poly phi;
  Poly psi;
};

// InvarianceError when the shifted alternating condition fails.
RhoAltPoly make_rho_alt(const RootSystem& rs, bool extended, const Poly& phi);
bool is_rho_alternating(const RootSystem& rs, bool extended, const Poly& phi);

// Phi(lambda) = sum_w eps(w) seed(w(lambda + rho) - rho).  DegenerateSeedError
// when the sum vanishes.
RhoAltPoly alt_symmetrize(const RootSystem& rs, bool extended, const Poly& seed);

struct VanishingReport {
  bool divisible = false;
  int factors_divided = 0;
  Poly quotient;  // Phi(lambda - rho) / pi(lambda)
  bool quotient_invariant = false;
};

VanishingReport vanishing_check(const RhoAltPoly& phi);

// T(Phi)(lambda) = pi(rho) Phi(lambda - rho) / pi(lambda).  NotDivisibleError
// if the vanishing check fails; InvarianceError if the result is not invariant.
Poly T_op(const RhoAltPoly& phi);
// T^-1(F)(mu) = pi(mu + rho) F(mu + rho) / pi(rho).
RhoAltPoly T_inv(const RootSystem& rs, bool extended, const Poly& F);

// The group the small side uses: for type D with n < k the restriction of a
// W_k invariant is W~_n invariant, so the extended group is used there.
bool small_side_extended(const PropagationPair& pair, bool large_extended);

// P_{k,n}(Phi) = T_n^-1(T_k(Phi) restricted to h_n).
RhoAltPoly P_restrict(const PropagationPair& pair, const RhoAltPoly& phi);
// For invariant inputs the restriction alone applies.
Poly P_restrict_invariant(const PropagationPair& pair, const Poly& F);

bool is_invariant_under(const RootSystem& rs, bool extended, const Poly& p);

// Random seeds whose alternation is nonzero with high probability: a few
// monomials of degree |Delta+| + extra with distinct, type-appropriate exponents.
Poly random_seed(const RootSystem& rs, std::mt19937_64& rng, int extra = 1);
// alt_symmetrize of random seeds, retried on degenerate ones.
RhoAltPoly random_rho_alt(const RootSystem& rs, bool extended, std::mt19937_64& rng);
// Random invariant: a short combination of products of elementary symmetric
// functions (in x_j^2 for B, C, D).
Poly random_invariant(const RootSystem& rs, std::mt19937_64& rng, int max_degree);

// Express a symmetric polynomial (in x, or in x^2 for B, C, D) through the
// elementary symmetric functions; the result has one variable per e_j.
// InvarianceError when the input is not of that form.
Poly to_elementary(const RootSystem& rs, const Poly& F);
// Evaluate a polynomial in e_1.. at the elementary functions of rs.
Poly from_elementary(const RootSystem& rs, const Poly& G);

struct SurjectivityWitness {
  bool lifted = false;      // F_n written through elementary functions
  bool maps_back = false;   // P_{k,n}(Phi_k) = Phi_n
  std::string status;       // "witnessed" or the failure reason
};

// Builds Phi_k from Phi_n through the elementary-function lift.
SurjectivityWitness surjectivity_witness(const PropagationPair& pair, const RhoAltPoly& phi_n);

// Class-one coefficient sequence of F_k on the small side, keyed by I-vectors.
struct CoeffReport {
  std::map<std::vector<long>, Rational> route_a;  // (F_k restricted)(mu_{I,n} + rho_n)
  std::map<std::vector<long>, Rational> route_b;  // F_k(pad(mu_{I,k} restricted + rho_n))
  std::map<std::vector<long>, long> degrees;      // deg(mu_{I,n})
  std::size_t literal_disagreements = 0;          // F_k(mu_{I,k} + pad(rho_n)) != route_a
  bool routes_agree = false;
};

// All I in (Z+)^n with |I| <= bound.
std::vector<std::vector<long>> i_vectors(int n, int bound);
CoeffReport C_coeff(const PropagationPair& pair, const Poly& F_k, int bound);

struct DimIdentityReport {
  std::size_t weights = 0;
  std::size_t mismatches = 0;
  bool pass = false;
};

// deg(mu) = pi(mu + rho)/pi(rho) against the Freudenthal totals for every
// dominant weight with Dynkin labels <= max_label.
DimIdentityReport Q_dim_identity(const RootSystem& rs, long max_label);

// Aggregated PW check for one (type, n, k) used by the CLI.
struct PWReport {
  ClassicalType type{};
  int n = 0, k = 0;
  int trials = 0;
  int vanishing_ok = 0;
  int roundtrip_ok = 0;
  int restrict_ok = 0;       // P output is shifted alternating on the small side
  int witnesses_ok = 0;
  bool coeff_routes_agree = false;
  bool pass = false;
  std::vector<std::string> failures;
};

PWReport check_pw(ClassicalType t, int n, int k, int trials, std::uint64_t seed);
nlohmann::json to_json(const PWReport& r);
nlohmann::json to_json(const VanishingReport& r);
nlohmann::json to_json(const CoeffReport& r);

}  // namespace wr
