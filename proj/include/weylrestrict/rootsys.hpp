#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/linalg.hpp"
#include "weylrestrict/rational.hpp"

namespace wr {

enum class ClassicalType { A, B, C, D };

std::string type_name(ClassicalType t);
ClassicalType parse_type(const std::string& s);  // "A".."D", case-insensitive

// Smallest rank for which the type is irreducible and not a duplicate of a
// smaller family (A1, B2, C3, D4).
int min_rank(ClassicalType t);

// Concrete realization of a classical root system.  Coordinates use the basis
// f_1, f_2, ... with f_1 at index 0.  Type A_n lives in R^{n+1} and all its
// vectors are traceless.
struct RootSystem {
  ClassicalType type{};
  int rank = 0;
  int ambient_dim = 0;
  bool permissive = false;
  std::string note;  // set when a permissive rank was accepted

  std::vector<CoordVector> roots;           // sorted
  std::vector<CoordVector> positive_roots;  // sorted
  std::vector<CoordVector> simple_roots;    // alpha_1 .. alpha_rank
  CoordVector rho;
  // The realization metric is metric_scale times the standard dot product.
  Rational metric_scale;

  bool is_root(const CoordVector& v) const;
  // Coefficients of v in the basis of simple roots; throws if v is outside
  // their span.
  std::vector<Rational> simple_coordinates(const CoordVector& v) const;
  // Orthogonal projection onto the span of the roots (identity except for A).
  CoordVector project(const CoordVector& v) const;
  // <v, alpha_j^vee> = 2<v,alpha_j>/<alpha_j,alpha_j> for every simple root.
  std::vector<Rational> dynkin_labels(const CoordVector& v) const;
  bool is_dominant(const CoordVector& v) const;
  bool is_integral(const CoordVector& v) const;

  RationalMatrix gram() const;  // Gram matrix of the simple roots (standard dot)
};

// RankError when the rank is below the type's minimum, unless permissive.
RootSystem build_root_system(ClassicalType t, int rank, bool permissive = false);

CoordVector highest_root(const RootSystem& rs);
// Coefficients of the highest root in the simple roots (alpha_1 first).
std::vector<long> highest_root_marks(const RootSystem& rs);

// Exact value c * sqrt(r) with r square-free.
struct SqrtValue {
  Rational coefficient;
  long radicand = 1;
  bool has_sqrt2() const { return radicand == 2; }
  std::string str() const;
  bool operator==(const SqrtValue& o) const { return coefficient == o.coefficient && radicand == o.radicand; }
};
SqrtValue exact_sqrt(const Rational& square);  // square must be >= 0 with a square-free part < 2^31

// Squared realization-metric length of each simple coroot 2 alpha/<alpha,alpha>.
std::vector<Rational> coroot_squared_lengths(const RootSystem& rs);
std::vector<SqrtValue> coroot_lengths(const RootSystem& rs);

nlohmann::json to_json(const RootSystem& rs);
nlohmann::json to_json(const CoordVector& v);  // list of "num/den" strings
CoordVector coords_from_json(const nlohmann::json& j);

}  // namespace wr
