#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/embedding.hpp"
#include "weylrestrict/rootsys.hpp"

namespace wr {

// A pair of root systems of the same type with h_n sitting inside h_k.
struct PropagationPair {
  RootSystem small;
  RootSystem large;
  Embedding embedding;
  int n = 0, k = 0;

  ClassicalType type() const { return large.type; }
  // Restriction of a functional on h_k to h_n (orthogonal projection).
  CoordVector restrict_weight(const CoordVector& v) const;
};

// Checks that alpha_{n,j} is the restriction of alpha_{k,j} for j <= n.
PropagationPair make_pair(ClassicalType t, int n, int k, bool permissive = true);

// Products propagate factor by factor: one (type, n, k) per factor.
struct FactorSpec {
  ClassicalType type{};
  int n = 0, k = 0;
};
std::vector<PropagationPair> make_product_pairs(const std::vector<FactorSpec>& factors, bool permissive = true);

// Rows of the classical compact symmetric space table.
enum class Family { A, B, D, C, AIII, AI, AII, BDI, DIII, CII, CI };

std::string family_name(Family f);
Family parse_family(const std::string& s);
const std::vector<Family>& all_families();

struct CatalogEntry {
  Family family{};
  int j = 0, p = 0, q = 0;  // j for single-parameter rows, p, q otherwise
  std::string space;        // e.g. "SO(p+q)/SO(p)xSO(q)"
  int rank = 0;
  long dim = 0;
  bool nonreduced = false;
  ClassicalType sigma_half_type{};  // type of Sigma_{1/2}
  ClassicalType sigma_two_type{};   // type of Sigma_2
  std::string rule;                 // "group" or "symmetric"
};

// Parameters: p, q for AIII, BDI, CII (p, q >= 1); j otherwise (passed as p).
CatalogEntry catalog_lookup(Family f, int p, int q = 0);
nlohmann::json to_json(const CatalogEntry& e);
// The table with its formulas, as shipped in data/catalog.json.
nlohmann::json catalog_resource();

// Reduced subsystems of a possibly nonreduced root set.
std::vector<CoordVector> sigma_half(const std::vector<CoordVector>& roots);  // drop a with a/2 a root
std::vector<CoordVector> sigma_two(const std::vector<CoordVector>& roots);   // drop a with 2a a root
// BC_r: {+-f_i +- f_j, +-f_i, +-2f_i}.
std::vector<CoordVector> bc_roots(int rank);
// Identify a reduced root set with one of the standard realizations.
std::optional<RootSystem> classify(const std::vector<CoordVector>& roots);
RootSystem sigma_two_system(const CatalogEntry& e);

// xi_j with <xi_i, alpha_j> / <alpha_j, alpha_j> = delta_ij, inside the span
// of the roots.
std::vector<CoordVector> class_one_weights(const RootSystem& rs);
std::vector<CoordVector> fundamental_weights(const RootSystem& rs);
// sum_j I_j xi_j
CoordVector class_one_weight(const RootSystem& rs, const std::vector<long>& I);
// mu in the Z+ span of the xi_j; returns the coefficients when it is.
std::optional<std::vector<long>> class_one_coordinates(const RootSystem& rs, const CoordVector& mu);

// rho = 1/2 sum m_a a over positive roots.  Multiplicities are caller input;
// a missing root counts with multiplicity 1.
CoordVector rho_with_multiplicities(const RootSystem& rs, const std::map<CoordVector, long>& mult);

struct XiReport {
  ClassicalType type{};
  int n = 0, k = 0;
  bool solves = false;       // defining relations hold on both sides
  bool integral = false;     // <xi, a>/<a, a> in Z+ for every positive root
  bool restricts = false;    // xi_{k,j}|h_n = xi_{n,j} for j <= n
  bool unique = false;       // and no other xi_{k,i} restricts to xi_{n,j}
  bool pass = false;
  std::vector<std::string> failures;
};

XiReport check_xi_restriction(const PropagationPair& pair);
nlohmann::json to_json(const XiReport& r);

}  // namespace wr
