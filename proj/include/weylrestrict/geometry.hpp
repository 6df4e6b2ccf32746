#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/rootsys.hpp"

namespace wr {

// Points of a are stored as rational multiples of pi, so every comparison
// below is exact.

struct Inequality {
  CoordVector normal;
  Rational bound;       // <normal, x> < bound (or <= when not strict)
  bool strict = true;
};

struct HPolytope {
  int dim = 0;
  std::vector<Inequality> inequalities;
  bool traceless = false;  // type A: also sum x_j = 0

  bool contains(const CoordVector& x) const;
  bool symmetric() const;  // every normal has its negative twin with the same bound
  // Largest t with t*y in the closure; y must be nonzero and inside the affine part.
  Rational exit_scale(const CoordVector& y) const;
};

// |a(x)| < 1/2 (in units of pi) for every root.
HPolytope omega(const RootSystem& rs);
// A, C: Omega.  B, D: |(w sigma)(x)| < 1/2 for w in W, sigma = 2 sum of simple roots.
HPolytope omega_star(const RootSystem& rs);

enum class OmegaKind { Omega, OmegaStar };
bool omega_membership(OmegaKind kind, const RootSystem& rs, const CoordVector& x);

// Exact rational samples with denominator dividing 1000.
class PointSampler {
 public:
  PointSampler(const RootSystem& rs, std::uint64_t seed);
  // Uniform on the box |x_i| <= halfwidth (traceless for type A).
  CoordVector next(const Rational& halfwidth);

 private:
  int dim_;
  bool traceless_;
  std::mt19937_64 rng_;
};

// One entry per root: a nonnegative combination of Omega* normals equal to the
// root whose bound total is <= 1/2.
struct Witness {
  CoordVector root;
  std::vector<std::pair<std::size_t, Rational>> terms;  // (inequality index, coefficient)
  Rational bound;
};

struct OmegaSubsetReport {
  ClassicalType type{};
  int rank = 0;
  bool marks_le_two = false;       // highest root marks are 1 or 2
  bool certificate = false;        // every root has a witness
  std::vector<Witness> witnesses;
  std::size_t samples = 0;
  std::size_t star_members = 0;
  std::size_t violations = 0;
  std::size_t probes = 0;
  std::size_t probe_failures = 0;  // probe just inside not in Omega*, or the facet point inside
  bool star_equals_omega = false;  // same inequality sets (A, C)
  bool pass = false;
};

OmegaSubsetReport check_omega_star_subset(ClassicalType t, int rank, std::size_t samples, std::uint64_t seed,
                                          bool permissive = true);
nlohmann::json to_json(const OmegaSubsetReport& r);

struct OmegaPropagationReport {
  ClassicalType type{};
  int n = 0, k = 0;
  std::size_t samples = 0;
  std::size_t small_members = 0;
  std::size_t mismatches = 0;       // pad(x) in Omega*_k differs from x in Omega*_n
  std::size_t probes = 0;
  std::size_t probe_mismatches = 0;
  // Type A: sum_{j != i}(x_i - x_j) = (r+1) x_i as a polynomial identity, and
  // |(r+1) x_i| < r/2 for r = r_n and r = r_k on every sampled member.
  bool identity_holds = true;
  std::size_t bound_failures = 0;
  bool pass = false;
};

OmegaPropagationReport check_omega_star_propagation(const PropagationPair& pair, std::size_t samples,
                                                    std::uint64_t seed);
nlohmann::json to_json(const OmegaPropagationReport& r);

struct RadiusReport {
  ClassicalType type{};
  int rank = 0;
  std::vector<SqrtValue> coroot_lengths;
  SqrtValue radius;  // coefficient of pi
  std::string str() const;  // e.g. "sqrt(2)*pi"
};

// min_j pi |t_j| over the simple coroots in the realization metric.
RadiusReport injectivity_radius(ClassicalType t, int rank, bool permissive = true);
nlohmann::json to_json(const RadiusReport& r);

// Radius (coefficient of pi) of the largest closed ball in the realization
// metric inside the closure of Omega*.  A lower bound for the support constant,
// not the sharp one.
SqrtValue support_radius_bound(ClassicalType t, int rank, bool permissive = true);

// a^2 < b^2 for nonnegative values.
bool sqrt_less(const SqrtValue& a, const SqrtValue& b);

}  // namespace wr
