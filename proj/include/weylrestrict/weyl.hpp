#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "json.hpp"
#include "weylrestrict/embedding.hpp"
#include "weylrestrict/rootsys.hpp"
#include "weylrestrict/signed_perm.hpp"

namespace wr {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// s_alpha as a signed permutation; NotARootError if alpha is not a root.
SignedPerm reflection(const RootSystem& rs, const CoordVector& alpha);

// |W|, or |W~| for the extended group (only differs for D).
unsigned long long weyl_order(ClassicalType t, int rank, bool extended = false);

// W(g,h) or, for type D with extended = true, W~ = W x {1, single sign change}.
// Generators are the simple reflections (plus one odd sign change for W~).
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs, bool extended = false);

  const RootSystem& root_system() const { return rs_; }
  bool extended() const { return extended_; }
  int dim() const { return rs_.ambient_dim; }
  const std::vector<SignedPerm>& generators() const { return gens_; }
  unsigned long long predicted_order() const;

  // Closure of the generators, computed once and sorted.  CapExceededError
  // when the predicted order exceeds the cap.
  const std::vector<SignedPerm>& elements(std::size_t cap = kDefaultEnumerationCap) const;

  // Structural membership test (no enumeration).
  bool contains(const SignedPerm& w) const;

 private:
  RootSystem rs_;
  bool extended_;
  std::vector<SignedPerm> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<SignedPerm> elements;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Stabilizer of the embedded small Cartan subspace, restricted to it.
struct StabilizerRestriction {
  std::size_t subgroup_order = 0;
  std::size_t kernel_order = 0;
  std::vector<SignedPerm> restricted;  // sorted, distinct, acting on R^small_dim
};

StabilizerRestriction stabilizer_restriction(const WeylGroup& large, const Embedding& emb);

struct RestrictionTheoremReport {
  ClassicalType type{};
  int n = 0, k = 0;
  bool extended = false;
  unsigned long long subgroup_order = 0;
  unsigned long long expected_subgroup_order = 0;
  unsigned long long restricted_order = 0;
  unsigned long long kernel_order = 0;
  unsigned long long small_order = 0;           // |W_n| of the same kind as the large group
  bool equals_small_group = false;              // restricted set == W_n (or W~_n)
  // Type D only: the plain stabilizer restricts onto W~(D_n), index 2 over W(D_n).
  bool d_index_two = false;
  bool d_equals_extended = false;
  bool pass = false;
  std::string detail;
};

RestrictionTheoremReport check_restriction_theorem(ClassicalType t, int n, int k, bool extended = false,
                                                   bool permissive = true);
nlohmann::json to_json(const RestrictionTheoremReport& r);

// Removing simple roots from the diagram of the large group gives a
// subsystem; compare the restricted stabilizer of its span with the Weyl
// group of the subsystem.
struct LeviRestrictionReport {
  ClassicalType type{};
  int k = 0;
  std::vector<int> removed;  // 1-based simple root indices
  std::size_t stabilizer_order = 0;
  std::size_t restricted_order = 0;
  std::size_t small_weyl_order = 0;
  bool equal = false;
  // Per connected component of the remaining diagram.
  struct Component {
    std::vector<int> nodes;  // 1-based
    bool simply_laced_chain = false;
    bool minus_identity_in_restriction = false;
  };
  std::vector<Component> components;
};

LeviRestrictionReport check_levi_restriction(ClassicalType t, int k, const std::vector<int>& removed,
                                             bool permissive = true);
nlohmann::json to_json(const LeviRestrictionReport& r);

nlohmann::json to_json(const SignedPerm& w);

}  // namespace wr
