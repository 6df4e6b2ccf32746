#include "weylrestrict/invariants.hpp"

#include <set>

#include "weylrestrict/errors.hpp"

namespace wr {

Poly char_poly(ClassicalType t, int rank) {
  const std::size_t N = t == ClassicalType::A ? rank + 1 : rank;
  const std::size_t V = N + 1;
  Poly tt = Poly::variable(V, N);
  Poly f = Poly::constant(V, 1);
  for (std::size_t j = 0; j < N; ++j) {
    Poly x = Poly::variable(V, j);
    f = t == ClassicalType::A ? f * (tt + x) : f * (tt * tt - x * x);
  }
  if (t == ClassicalType::B) f = f * tt;
  return f;
}

namespace {

// Coefficient of t^d, as a polynomial in the remaining variables.
Poly t_coefficient(const Poly& f, int d) {
  const std::size_t N = f.nvars() - 1;
  Poly out(N);
  for (const auto& [e, c] : f.terms()) {
    if (e[N] != d) continue;
    out.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(N)), c);
  }
  return out;
}

}  // namespace

InvariantFamily char_poly_family(ClassicalType t, int rank, bool permissive) {
  RootSystem rs = build_root_system(t, rank, permissive);
  InvariantFamily fam;
  fam.type = t;
  fam.rank = rank;
  fam.nvars = rs.ambient_dim;
  Poly f = char_poly(t, rank);
  switch (t) {
    case ClassicalType::A:
      for (int nu = 1; nu <= rank + 1; ++nu) {
        fam.generators.push_back(t_coefficient(f, nu - 1));
        fam.degrees.push_back(rank + 2 - nu);
      }
      break;
    case ClassicalType::B:
      for (int nu = 1; nu <= rank; ++nu) {
        fam.generators.push_back(t_coefficient(f, 2 * nu - 1));
        fam.degrees.push_back(2 * (rank + 1 - nu));
      }
      break;
    case ClassicalType::C:
      for (int nu = 1; nu <= rank; ++nu) {
        fam.generators.push_back(t_coefficient(f, 2 * (nu - 1)));
        fam.degrees.push_back(2 * (rank + 1 - nu));
      }
      break;
    case ClassicalType::D: {
      Exponent ones(rank, 1);
      fam.generators.push_back(Poly::monomial(ones, 1));
      fam.degrees.push_back(rank);
      for (int nu = 2; nu <= rank; ++nu) {
        fam.generators.push_back(t_coefficient(f, 2 * (nu - 1)));
        fam.degrees.push_back(2 * (rank + 1 - nu));
      }
      fam.det_generator = t_coefficient(f, 0);
      Poly sq = fam.generators[0] * fam.generators[0];
      if (*fam.det_generator != (rank % 2 ? -sq : sq))
        throw InvarianceError("Pfaffian square does not match the constant term");
      break;
    }
  }
  WeylGroup w(rs);
  for (std::size_t i = 0; i < fam.generators.size(); ++i) {
    if (fam.generators[i].total_degree() != fam.degrees[i] || !fam.generators[i].is_homogeneous())
      throw InvarianceError("generator has unexpected degree");
    if (!is_invariant(fam.generators[i], w)) throw InvarianceError("generator is not Weyl invariant");
  }
  return fam;
}

std::vector<Poly> restrict_family(const InvariantFamily& fam, const Embedding& emb) {
  std::vector<Poly> out;
  for (const auto& g : fam.generators) out.push_back(emb.restrict(g));
  return out;
}

bool is_invariant(const Poly& p, const WeylGroup& w) {
  for (const auto& g : w.generators())
    if (act_linear(p, g) != p) return false;
  return true;
}

Poly reynolds(const Poly& p, const WeylGroup& w) {
  Poly sum(p.nvars(), p.laurent());
  const auto& els = w.elements();
  for (const auto& g : els) sum += act_linear(p, g);
  return sum * Rational(1, static_cast<long>(els.size()));
}

SurjectivityReport check_surjectivity(ClassicalType t, int n, int k) {
  if (n < 1 || n > k) throw RankError("surjectivity check needs 1 <= n <= k");
  SurjectivityReport rep;
  rep.type = t;
  rep.n = n;
  rep.k = k;
  InvariantFamily big = char_poly_family(t, k), small = char_poly_family(t, n);
  Embedding emb = make_embedding(static_cast<int>(small.nvars), static_cast<int>(big.nvars));
  std::vector<Poly> res = restrict_family(big, emb);
  const int shift = k - n;
  bool ok = true;
  std::set<int> hit;  // small generator indices reached (1-based); 0 marks the D det generator

  for (int nu = 1; nu <= static_cast<int>(res.size()); ++nu) {
    const Poly& r = res[nu - 1];
    std::string m;
    if (t == ClassicalType::D && nu == 1) {
      bool good = k == n ? r == small.p(1) : r.is_zero();
      if (k == n && good) hit.insert(1);
      m = good ? (k == n ? "p_n,1" : "0") : "unexpected";
      ok = ok && good;
    } else if (t == ClassicalType::D && nu - shift == 1 && k > n) {
      Poly sq = small.p(1) * small.p(1);
      rep.det_identity = r == *small.det_generator && r == (n % 2 ? -sq : sq);
      m = rep.det_identity ? "(-1)^n p_n,1^2" : "unexpected";
      if (rep.det_identity) hit.insert(0);
      ok = ok && rep.det_identity;
    } else if (nu - shift >= 1) {
      bool good = r == small.p(nu - shift);
      m = good ? "p_n," + std::to_string(nu - shift) : "unexpected";
      if (good) hit.insert(nu - shift);
      ok = ok && good;
    } else {
      bool good = r.is_zero();
      m = good ? "0" : "unexpected";
      ok = ok && good;
    }
    rep.matches.push_back(m);
  }
  rep.identities_hold = ok;

  if (t == ClassicalType::D) {
    rep.restricted_even = true;
    for (const auto& r : res)
      for (int i = 0; i < n; ++i)
        if (act_linear(r, SignedPerm::sign_change(n, i)) != r) rep.restricted_even = false;
    rep.pfaffian_odd = act_linear(small.p(1), SignedPerm::sign_change(n, 0)) == -small.p(1);
    if (k == n) {
      rep.surjective = hit.size() == small.generators.size();
      rep.restricted_even = false;
      rep.pass = ok && rep.surjective;
    } else {
      // The even subalgebra is generated by det and p_{n,2}, ..., p_{n,n}.
      bool all = hit.count(0) > 0;
      for (int nu = 2; nu <= n; ++nu) all = all && hit.count(nu) > 0;
      rep.surjective = all;
      rep.pass = ok && all && rep.restricted_even && rep.pfaffian_odd;
    }
  } else {
    rep.surjective = hit.size() == small.generators.size();
    rep.pass = ok && rep.surjective;
  }
  return rep;
}

nlohmann::json to_json(const SurjectivityReport& r) {
  nlohmann::json j;
  j["type"] = type_name(r.type);
  j["n"] = r.n;
  j["k"] = r.k;
  j["matches"] = r.matches;
  j["identities_hold"] = r.identities_hold;
  j["surjective"] = r.surjective;
  if (r.type == ClassicalType::D) {
    j["restricted_even"] = r.restricted_even;
    j["pfaffian_odd"] = r.pfaffian_odd;
    j["det_identity"] = r.det_identity;
  }
  j["pass"] = r.pass;
  return j;
}

nlohmann::json to_json(const InvariantFamily& f) {
  nlohmann::json j;
  j["type"] = type_name(f.type);
  j["rank"] = f.rank;
  j["nvars"] = f.nvars;
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < f.generators.size(); ++i)
    gens.push_back({{"nu", i + 1}, {"degree", f.degrees[i]}, {"text", f.generators[i].str()},
                    {"terms", to_json(f.generators[i])}});
  j["generators"] = gens;
  if (f.det_generator) {
    j["det_generator"] = f.det_generator->str();
    j["pfaffian_convention"] = "p_1 = x_1...x_k; p_1^2 = (-1)^k * det";
  }
  return j;
}

GroupCaseReport check_group_case(ClassicalType t, int rank, bool extended) {
  GroupCaseReport rep;
  rep.type = t;
  rep.rank = rank;
  RootSystem rs = build_root_system(t, rank, true);
  WeylGroup w(rs, extended);
  const int N = rs.ambient_dim;
  const auto& els = w.elements();

  // (u, v) maps the diagonal {(x, x)} to itself iff u = v; restrict to x.
  std::set<SignedPerm> restricted;
  for (const auto& u : els)
    for (const auto& v : els) {
      bool stable = true;
      for (int i = 0; i < N && stable; ++i) {
        CoordVector e = CoordVector::unit(N, i);
        stable = u.apply(e) == v.apply(e);
      }
      if (!stable) continue;
      ++rep.stabilizer_order;
      restricted.insert(u);
    }
  rep.restricted_order = restricted.size();
  rep.weyl_ok = std::vector<SignedPerm>(restricted.begin(), restricted.end()) == els;

  // Generators of I(a + a) are p(x) and p(y); substituting y = x returns p.
  InvariantFamily fam = char_poly_family(t, rank);
  rep.invariants_ok = true;
  for (const auto& p : fam.generators) {
    Poly px = extend_vars(p, 2 * N);
    std::map<std::size_t, Poly> to_y;
    for (int i = 0; i < N; ++i) to_y.emplace(i, Poly::variable(2 * N, N + i));
    Poly py = substitute(px, to_y);
    std::map<std::size_t, Poly> diag;
    for (int i = 0; i < N; ++i) diag.emplace(N + i, Poly::variable(2 * N, i));
    Poly rx = truncate_vars(substitute(px, diag), N), ry = truncate_vars(substitute(py, diag), N);
    rep.invariants_ok = rep.invariants_ok && rx == p && ry == p;
  }
  return rep;
}

}  // namespace wr
