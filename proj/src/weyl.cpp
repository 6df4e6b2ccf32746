#include "weylrestrict/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "weylrestrict/errors.hpp"

namespace wr {

SignedPerm reflection(const RootSystem& rs, const CoordVector& alpha) {
  if (!rs.is_root(alpha)) throw NotARootError(alpha.str() + " is not a root of " + type_name(rs.type));
  const int n = rs.ambient_dim;
  RationalMatrix m = RationalMatrix::identity(n);
  Rational f = Rational(2) / dot(alpha, alpha);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= f * alpha[i] * alpha[j];
  return SignedPerm::from_matrix(m);
}

namespace {

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

}  // namespace

unsigned long long weyl_order(ClassicalType t, int rank, bool extended) {
  switch (t) {
    case ClassicalType::A: return factorial(rank + 1);
    case ClassicalType::B:
    case ClassicalType::C: return (1ULL << rank) * factorial(rank);
    case ClassicalType::D: return (1ULL << (extended ? rank : rank - 1)) * factorial(rank);
  }
  return 0;
}

WeylGroup::WeylGroup(RootSystem rs, bool extended) : rs_(std::move(rs)), extended_(extended) {
  for (const auto& a : rs_.simple_roots) gens_.push_back(reflection(rs_, a));
  if (extended_ && rs_.type == ClassicalType::D) gens_.push_back(SignedPerm::sign_change(rs_.ambient_dim, 0));
}

unsigned long long WeylGroup::predicted_order() const { return weyl_order(rs_.type, rs_.rank, extended_); }

const std::vector<SignedPerm>& WeylGroup::elements(std::size_t cap) const {
  unsigned long long predicted = predicted_order();
  if (predicted > cap)
    throw CapExceededError("Weyl group of order " + std::to_string(predicted) + " exceeds the enumeration cap " +
                               std::to_string(cap),
                           predicted);
  std::call_once(cache_->once, [&] {
    std::unordered_set<SignedPerm, SignedPermHash> seen;
    seen.reserve(predicted * 2);
    std::deque<SignedPerm> queue;
    SignedPerm id(rs_.ambient_dim);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      SignedPerm x = queue.front();
      queue.pop_front();
      for (const auto& g : gens_) {
        SignedPerm y = g * x;
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    cache_->elements.assign(seen.begin(), seen.end());
    std::sort(cache_->elements.begin(), cache_->elements.end());
  });
  return cache_->elements;
}

bool WeylGroup::contains(const SignedPerm& w) const {
  if (w.dim() != rs_.ambient_dim) return false;
  int negatives = 0;
  for (int i = 0; i < w.dim(); ++i) negatives += w.sign(i) < 0;
  switch (rs_.type) {
    case ClassicalType::A: return negatives == 0;
    case ClassicalType::B:
    case ClassicalType::C: return true;
    case ClassicalType::D: return extended_ || negatives % 2 == 0;
  }
  return false;
}

StabilizerRestriction stabilizer_restriction(const WeylGroup& large, const Embedding& emb) {
  if (emb.large_dim != large.dim()) throw DimensionError("embedding does not match the group");
  const int m = emb.small_dim;
  // The embedded Cartan subspace is either the coordinate prefix R^m or, for
  // type A, its traceless part.  A signed permutation maps the traceless part
  // of R^m into itself exactly when it maps the prefix to itself (m >= 2).
  StabilizerRestriction out;
  std::set<SignedPerm> restricted;
  for (const auto& w : large.elements()) {
    if (!w.stabilizes_prefix(m)) continue;
    ++out.subgroup_order;
    SignedPerm r = w.restrict_prefix(m);
    if (r.is_identity()) ++out.kernel_order;
    restricted.insert(r);
  }
  out.restricted.assign(restricted.begin(), restricted.end());
  return out;
}

namespace {

unsigned long long expected_stabilizer_order(ClassicalType t, int n, int k, bool extended) {
  switch (t) {
    case ClassicalType::A: return factorial(n + 1) * factorial(k - n);
    case ClassicalType::B:
    case ClassicalType::C: return (1ULL << k) * factorial(n) * factorial(k - n);
    case ClassicalType::D:
      if (extended) return (1ULL << k) * factorial(n) * factorial(k - n);
      if (k == n) return weyl_order(t, n, false);
      // Even sign changes overall, free on each block separately.
      return (1ULL << (k - 1)) * factorial(n) * factorial(k - n);
  }
  return 0;
}

}  // namespace

RestrictionTheoremReport check_restriction_theorem(ClassicalType t, int n, int k, bool extended, bool permissive) {
  if (n < 1 || n > k) throw RankError("restriction theorem needs 1 <= n <= k");
  RestrictionTheoremReport rep;
  rep.type = t;
  rep.n = n;
  rep.k = k;
  rep.extended = extended;
  WeylGroup wk(build_root_system(t, k, permissive), extended);
  WeylGroup wn(build_root_system(t, n, permissive), extended);
  Embedding emb = make_embedding(wn.dim(), wk.dim());
  StabilizerRestriction sr = stabilizer_restriction(wk, emb);
  rep.subgroup_order = sr.subgroup_order;
  rep.kernel_order = sr.kernel_order;
  rep.restricted_order = sr.restricted.size();
  rep.expected_subgroup_order = expected_stabilizer_order(t, n, k, extended);
  rep.small_order = wn.elements().size();
  rep.equals_small_group = sr.restricted == wn.elements();
  bool orders_ok = rep.subgroup_order == rep.expected_subgroup_order &&
                   rep.kernel_order * rep.restricted_order == rep.subgroup_order;

  if (t == ClassicalType::D && !extended && k > n) {
    WeylGroup wn_ext(wn.root_system(), true);
    bool contains_small = std::includes(sr.restricted.begin(), sr.restricted.end(), wn.elements().begin(),
                                        wn.elements().end());
    rep.d_index_two = contains_small && rep.restricted_order == 2 * rep.small_order;
    rep.d_equals_extended = sr.restricted == wn_ext.elements();
    rep.pass = orders_ok && rep.d_index_two && rep.d_equals_extended && !rep.equals_small_group;
    rep.detail = "restricted stabilizer is W~(D" + std::to_string(n) + "), index 2 over W(D" +
                 std::to_string(n) + ")";
  } else {
    rep.pass = orders_ok && rep.equals_small_group;
    rep.detail = "restricted stabilizer equals W(" + type_name(t) + std::to_string(n) + ")" +
                 (extended ? " extended" : "");
  }
  if (!rep.pass) rep.detail = "FAILED: " + rep.detail;
  return rep;
}

nlohmann::json to_json(const RestrictionTheoremReport& r) {
  nlohmann::json j;
  j["type"] = type_name(r.type);
  j["n"] = r.n;
  j["k"] = r.k;
  j["extended"] = r.extended;
  j["subgroup_order"] = r.subgroup_order;
  j["expected_subgroup_order"] = r.expected_subgroup_order;
  j["restricted_order"] = r.restricted_order;
  j["kernel_order"] = r.kernel_order;
  j["small_order"] = r.small_order;
  j["equals_small_group"] = r.equals_small_group;
  if (r.type == ClassicalType::D && !r.extended && r.k > r.n) {
    j["d_index_two"] = r.d_index_two;
    j["d_equals_extended"] = r.d_equals_extended;
  }
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

nlohmann::json to_json(const SignedPerm& w) {
  std::vector<int> img = w.images();
  for (auto& x : img) ++x;
  return {{"image", img}, {"signs", w.signs()}};
}

// ---------------------------------------------------------------------------

namespace {

// Restricted action of a linear map on span(B), B of full column rank.
struct SubspaceFrame {
  std::vector<CoordVector> basis;
  RationalMatrix b;          // columns = basis
  RationalMatrix left_inv;   // (B^T B)^{-1} B^T

  explicit SubspaceFrame(std::vector<CoordVector> vs) : basis(std::move(vs)) {
    b = RationalMatrix::from_columns(basis);
    RationalMatrix bt = b.transpose();
    left_inv = (bt * b).inverse() * bt;
  }
  bool contains(const CoordVector& v) const { return b * (left_inv * v) == v; }
  RationalMatrix restrict(const RationalMatrix& w) const { return left_inv * w * b; }
};

std::set<RationalMatrix> matrix_closure(const std::vector<RationalMatrix>& gens, std::size_t dim) {
  std::set<RationalMatrix> seen{RationalMatrix::identity(dim)};
  std::deque<RationalMatrix> queue{RationalMatrix::identity(dim)};
  while (!queue.empty()) {
    RationalMatrix x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      RationalMatrix y = g * x;
      if (seen.insert(y).second) queue.push_back(y);
      if (seen.size() > 1'000'000) throw CapExceededError("matrix group closure too large", seen.size());
    }
  }
  return seen;
}

}  // namespace

LeviRestrictionReport check_levi_restriction(ClassicalType t, int k, const std::vector<int>& removed,
                                             bool permissive) {
  RootSystem rs = build_root_system(t, k, permissive);
  WeylGroup w(rs);
  LeviRestrictionReport rep;
  rep.type = t;
  rep.k = k;
  rep.removed = removed;
  std::sort(rep.removed.begin(), rep.removed.end());

  std::vector<int> kept;
  for (int j = 1; j <= static_cast<int>(rs.simple_roots.size()); ++j)
    if (!std::binary_search(rep.removed.begin(), rep.removed.end(), j)) kept.push_back(j);
  if (kept.empty()) throw std::invalid_argument("every simple root removed");
  for (int r : rep.removed)
    if (r < 1 || r > static_cast<int>(rs.simple_roots.size()))
      throw std::invalid_argument("removed simple root index out of range");

  std::vector<CoordVector> basis;
  for (int j : kept) basis.push_back(rs.simple_roots[j - 1]);
  SubspaceFrame frame(basis);
  const std::size_t m = basis.size();

  std::set<RationalMatrix> restricted;
  for (const auto& g : w.elements()) {
    bool stable = true;
    for (const auto& v : basis)
      if (!frame.contains(g.apply(v))) {
        stable = false;
        break;
      }
    if (!stable) continue;
    ++rep.stabilizer_order;
    restricted.insert(frame.restrict(g.matrix()));
  }
  rep.restricted_order = restricted.size();

  std::vector<RationalMatrix> small_gens;
  for (const auto& v : basis) small_gens.push_back(frame.restrict(reflection(rs, v).matrix()));
  std::set<RationalMatrix> small = matrix_closure(small_gens, m);
  rep.small_weyl_order = small.size();
  rep.equal = small == restricted;

  // Connected components of the remaining diagram.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    std::deque<std::size_t> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t b = 0; b < m; ++b)
        if (comp[b] == -1 && dot(basis[a], basis[b]) != 0) {
          comp[b] = ncomp;
          q.push_back(b);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    LeviRestrictionReport::Component cc;
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < m; ++s)
      if (comp[s] == c) {
        idx.push_back(s);
        cc.nodes.push_back(kept[s]);
      }
    bool equal_lengths = true, chain = true;
    for (std::size_t a : idx) {
      if (dot(basis[a], basis[a]) != dot(basis[idx[0]], basis[idx[0]])) equal_lengths = false;
      int degree = 0;
      for (std::size_t b : idx)
        if (a != b && dot(basis[a], basis[b]) != 0) ++degree;
      if (degree > 2) chain = false;
    }
    cc.simply_laced_chain = equal_lengths && chain;
    for (const auto& r : restricted) {
      bool minus = true;
      for (std::size_t a : idx)
        for (std::size_t i = 0; i < m && minus; ++i)
          if (r(i, a) != (i == a ? -1 : 0)) minus = false;
      if (minus) {
        cc.minus_identity_in_restriction = true;
        break;
      }
    }
    rep.components.push_back(cc);
  }
  return rep;
}

nlohmann::json to_json(const LeviRestrictionReport& r) {
  nlohmann::json j;
  j["type"] = type_name(r.type);
  j["k"] = r.k;
  j["removed"] = r.removed;
  j["stabilizer_order"] = r.stabilizer_order;
  j["restricted_order"] = r.restricted_order;
  j["small_weyl_order"] = r.small_weyl_order;
  j["equal"] = r.equal;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components)
    comps.push_back({{"nodes", c.nodes},
                     {"simply_laced_chain", c.simply_laced_chain},
                     {"minus_identity_in_restriction", c.minus_identity_in_restriction}});
  j["components"] = comps;
  return j;
}

}  // namespace wr
