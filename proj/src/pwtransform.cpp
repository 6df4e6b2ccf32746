#include "weylrestrict/pwtransform.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "weylrestrict/errors.hpp"
#include "weylrestrict/spectral.hpp"

namespace wr {

Poly varpi_poly(const RootSystem& rs) {
  Poly p = Poly::constant(rs.ambient_dim, 1);
  for (const auto& a : rs.positive_roots) p = p * Poly::linear(a);
  return p;
}

int alternating_sign(const RootSystem& rs, const SignedPerm& w) {
  std::set<CoordVector> pos(rs.positive_roots.begin(), rs.positive_roots.end());
  int s = 1;
  for (const auto& a : rs.positive_roots)
    if (!pos.count(w.apply(a))) s = -s;
  return s;
}

namespace {

bool alternating(const RootSystem& rs, bool extended, const Poly& psi) {
  WeylGroup w(rs, extended);
  for (const auto& g : w.generators()) {
    Poly moved = act_linear(psi, g);
    if (alternating_sign(rs, g) > 0 ? moved != psi : moved != -psi) return false;
  }
  return true;
}

CoordVector negated(const CoordVector& v) { return -v; }

}  // namespace

bool is_invariant_under(const RootSystem& rs, bool extended, const Poly& p) {
  WeylGroup w(rs, extended);
  for (const auto& g : w.generators())
    if (act_linear(p, g) != p) return false;
  return true;
}

bool is_rho_alternating(const RootSystem& rs, bool extended, const Poly& phi) {
  return alternating(rs, extended, shift(phi, negated(rs.rho)));
}

RhoAltPoly make_rho_alt(const RootSystem& rs, bool extended, const Poly& phi) {
  Poly psi = shift(phi, negated(rs.rho));
  if (!alternating(rs, extended, psi)) throw InvarianceError("polynomial is not rho-shifted alternating");
  return {rs, extended, phi, psi};
}

RhoAltPoly alt_symmetrize(const RootSystem& rs, bool extended, const Poly& seed) {
  if (static_cast<int>(seed.nvars()) != rs.ambient_dim) throw DimensionError("seed has the wrong variable count");
  Poly base = shift(seed, negated(rs.rho));
  WeylGroup w(rs, extended);
  Poly psi(rs.ambient_dim);
  for (const auto& g : w.elements()) {
    Poly moved = act_linear(base, g);
    if (alternating_sign(rs, g) > 0) psi += moved;
    else psi -= moved;
  }
  if (psi.is_zero()) throw DegenerateSeedError("alternating sum of the seed vanishes");
  return {rs, extended, shift(psi, rs.rho), psi};
}

VanishingReport vanishing_check(const RhoAltPoly& phi) {
  VanishingReport rep;
  Poly q = phi.psi;
  try {
    for (const auto& a : phi.rs.positive_roots) {
      q = exact_divide(q, Poly::linear(a));
      ++rep.factors_divided;
    }
    rep.divisible = true;
    rep.quotient = q;
    rep.quotient_invariant = is_invariant_under(phi.rs, phi.extended, q);
  } catch (const NotDivisibleError&) {
    rep.divisible = false;
  }
  return rep;
}

Poly T_op(const RhoAltPoly& phi) {
  VanishingReport v = vanishing_check(phi);
  if (!v.divisible) throw NotDivisibleError("pi(lambda) does not divide Phi(lambda - rho)");
  if (!v.quotient_invariant) throw InvarianceError("T(Phi) is not invariant");
  return v.quotient * varpi(phi.rs, phi.rs.rho);
}

RhoAltPoly T_inv(const RootSystem& rs, bool extended, const Poly& F) {
  if (static_cast<int>(F.nvars()) != rs.ambient_dim) throw DimensionError("F has the wrong variable count");
  if (!is_invariant_under(rs, extended, F)) throw InvarianceError("T^-1 needs an invariant polynomial");
  Poly psi = varpi_poly(rs) * F * (Rational(1) / varpi(rs, rs.rho));
  return {rs, extended, shift(psi, rs.rho), psi};
}

bool small_side_extended(const PropagationPair& pair, bool large_extended) {
  if (pair.type() == ClassicalType::D && pair.n < pair.k) return true;
  return large_extended;
}

Poly P_restrict_invariant(const PropagationPair& pair, const Poly& F) { return pair.embedding.restrict(F); }

RhoAltPoly P_restrict(const PropagationPair& pair, const RhoAltPoly& phi) {
  Poly F = T_op(phi);
  return T_inv(pair.small, small_side_extended(pair, phi.extended), P_restrict_invariant(pair, F));
}

// ---------------------------------------------------------------------------
// Random inputs

namespace {

bool squared_type(const RootSystem& rs) { return rs.type != ClassicalType::A; }

// e_j in N variables, in x or x^2.
Poly elementary(std::size_t N, int j, bool squared) {
  Poly e = Poly::constant(N + 1, 1);
  Poly t = Poly::variable(N + 1, N);
  for (std::size_t i = 0; i < N; ++i) {
    Poly x = Poly::variable(N + 1, i);
    e = e * (t + (squared ? x * x : x));
  }
  // Coefficient of t^{N - j}.
  Poly out(N);
  for (const auto& [ex, c] : e.terms()) {
    if (ex[N] != static_cast<int>(N) - j) continue;
    out.add_term(Exponent(ex.begin(), ex.begin() + static_cast<long>(N)), c);
  }
  return out;
}

}  // namespace

Poly random_seed(const RootSystem& rs, std::mt19937_64& rng, int extra) {
  const int N = rs.ambient_dim;
  std::vector<int> base(N);
  for (int i = 0; i < N; ++i) {
    switch (rs.type) {
      case ClassicalType::A: base[i] = i; break;
      case ClassicalType::B:
      case ClassicalType::C: base[i] = 2 * i + 1; break;
      case ClassicalType::D: base[i] = 2 * i; break;
    }
  }
  const int step = rs.type == ClassicalType::A ? 1 : 2;
  std::uniform_int_distribution<int> coef(1, 5), sign(0, 1), count(1, 3);
  Poly seed(N);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e = base;
    std::shuffle(e.begin(), e.end(), rng);
    *std::max_element(e.begin(), e.end()) += step * (extra + t);
    seed.add_term(e, Rational(sign(rng) ? coef(rng) : -coef(rng)));
  }
  // Some lower-degree noise; it only changes the result through the shift.
  std::uniform_int_distribution<int> var(0, N - 1);
  Exponent low(N, 0);
  low[var(rng)] = 1;
  seed.add_term(low, Rational(coef(rng)));
  return seed;
}

Poly random_invariant(const RootSystem& rs, std::mt19937_64& rng, int max_degree) {
  const int N = rs.ambient_dim;
  const bool sq = squared_type(rs);
  const int unit = sq ? 2 : 1;
  std::uniform_int_distribution<int> coef(-4, 4), pick(1, N);
  Poly F = Poly::constant(N, Rational(coef(rng)));
  for (int t = 0; t < 3; ++t) {
    Poly term = Poly::constant(N, Rational(coef(rng)));
    int deg = 0;
    for (int f = 0; f < 3; ++f) {
      int j = pick(rng);
      if (deg + unit * j > max_degree) continue;
      deg += unit * j;
      term = term * elementary(N, j, sq);
    }
    F += term;
  }
  return F;
}

Poly to_elementary(const RootSystem& rs, const Poly& F) {
  const std::size_t N = rs.ambient_dim;
  const bool sq = squared_type(rs);
  if (F.nvars() != N) throw DimensionError("F has the wrong variable count");
  Poly rest(N);
  for (const auto& [e, c] : F.terms()) {
    Exponent h = e;
    for (auto& x : h) {
      if (sq && x % 2) throw InvarianceError("odd exponent in a polynomial of x^2");
      if (sq) x /= 2;
    }
    rest.add_term(h, c);
  }
  std::vector<Poly> es;
  for (std::size_t j = 1; j <= N; ++j) es.push_back(elementary(N, static_cast<int>(j), false));
  Poly G(N);
  while (!rest.is_zero()) {
    const auto [a, c] = rest.leading_term();
    Exponent g(N);
    Poly prod = Poly::constant(N, c);
    for (std::size_t j = 0; j < N; ++j) {
      int d = a[j] - (j + 1 < N ? a[j + 1] : 0);
      if (d < 0) throw InvarianceError("polynomial is not symmetric");
      g[j] = d;
      prod = prod * es[j].pow(static_cast<unsigned>(d));
    }
    G.add_term(g, c);
    rest -= prod;
  }
  return G;
}

Poly from_elementary(const RootSystem& rs, const Poly& G) {
  const std::size_t N = rs.ambient_dim;
  std::map<std::size_t, Poly> values;
  for (std::size_t j = 0; j < G.nvars(); ++j) values.emplace(j, elementary(N, static_cast<int>(j + 1), squared_type(rs)));
  return substitute(G, values, N);
}

SurjectivityWitness surjectivity_witness(const PropagationPair& pair, const RhoAltPoly& phi_n) {
  SurjectivityWitness w;
  try {
    Poly Fn = T_op(phi_n);
    Poly G = to_elementary(pair.small, Fn);
    w.lifted = true;
    Poly Fk = from_elementary(pair.large, extend_vars(G, pair.large.ambient_dim));
    RhoAltPoly phik = T_inv(pair.large, false, Fk);
    RhoAltPoly back = P_restrict(pair, phik);
    w.maps_back = back.psi == phi_n.psi;
    w.status = w.maps_back ? "witnessed" : "preimage does not map back";
  } catch (const std::exception& e) {
    w.status = e.what();
  }
  return w;
}

// ---------------------------------------------------------------------------
// Coefficients

std::vector<std::vector<long>> i_vectors(int n, int bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

CoeffReport C_coeff(const PropagationPair& pair, const Poly& F_k, int bound) {
  CoeffReport rep;
  auto xs = class_one_weights(pair.small), xl = class_one_weights(pair.large);
  Poly Fr = P_restrict_invariant(pair, F_k);
  const CoordVector& rho_n = pair.small.rho;
  for (const auto& I : i_vectors(static_cast<int>(xs.size()), bound)) {
    CoordVector mn(pair.small.ambient_dim), mk(pair.large.ambient_dim);
    for (std::size_t j = 0; j < I.size(); ++j) {
      mn += xs[j] * Rational(I[j]);
      mk += xl[j] * Rational(I[j]);
    }
    rep.route_a[I] = evaluate(Fr, mn + rho_n);
    rep.route_b[I] = evaluate(F_k, pair.embedding.pad(pair.restrict_weight(mk) + rho_n));
    rep.degrees[I] = weyl_dim(pair.small, mn);
    if (evaluate(F_k, mk + pair.embedding.pad(rho_n)) != rep.route_a[I]) ++rep.literal_disagreements;
  }
  rep.routes_agree = rep.route_a == rep.route_b;
  return rep;
}

DimIdentityReport Q_dim_identity(const RootSystem& rs, long max_label) {
  DimIdentityReport rep;
  const std::size_t r = rs.simple_roots.size();
  std::vector<long> l(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      CoordVector mu = weight_from_labels(rs, l);
      ++rep.weights;
      if (weyl_dim(rs, mu) != total_multiplicity(freudenthal_weights(rs, mu))) ++rep.mismatches;
      return;
    }
    for (long v = 0; v <= max_label; ++v) {
      l[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  rep.pass = rep.mismatches == 0;
  return rep;
}

RhoAltPoly random_rho_alt(const RootSystem& rs, bool extended, std::mt19937_64& rng) {
  for (int attempt = 0;; ++attempt) {
    try {
      return alt_symmetrize(rs, extended, random_seed(rs, rng, attempt % 3));
    } catch (const DegenerateSeedError&) {
      if (attempt > 20) throw;
    }
  }
}

PWReport check_pw(ClassicalType t, int n, int k, int trials, std::uint64_t seed) {
  PWReport rep;
  rep.type = t;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  PropagationPair pair = make_pair(t, n, k);
  std::mt19937_64 rng(seed);
  Poly last_F;
  for (int i = 0; i < trials; ++i) {
    RhoAltPoly phi = random_rho_alt(pair.large, false, rng);
    auto v = vanishing_check(phi);
    if (v.divisible && v.quotient_invariant) ++rep.vanishing_ok;
    else rep.failures.push_back("vanishing, trial " + std::to_string(i));
    try {
      Poly F = T_op(phi);
      last_F = F;
      if (T_inv(pair.large, false, F).psi == phi.psi) ++rep.roundtrip_ok;
      else rep.failures.push_back("round trip, trial " + std::to_string(i));
      RhoAltPoly small = P_restrict(pair, phi);
      if (alternating(small.rs, small.extended, small.psi)) ++rep.restrict_ok;
      else rep.failures.push_back("restriction not alternating, trial " + std::to_string(i));
    } catch (const std::exception& e) {
      rep.failures.push_back(std::string(e.what()) + ", trial " + std::to_string(i));
    }
    RhoAltPoly phin = random_rho_alt(pair.small, small_side_extended(pair, false), rng);
    auto w = surjectivity_witness(pair, phin);
    if (w.maps_back) ++rep.witnesses_ok;
    else rep.failures.push_back("witness: " + w.status);
  }
  if (!last_F.is_zero() || trials == 0) {
    if (trials == 0) last_F = Poly::constant(pair.large.ambient_dim, 1);
    rep.coeff_routes_agree = C_coeff(pair, last_F, 3).routes_agree;
    if (!rep.coeff_routes_agree) rep.failures.push_back("coefficient routes disagree");
  }
  rep.pass = rep.failures.empty();
  return rep;
}

nlohmann::json to_json(const PWReport& r) {
  return {{"type", type_name(r.type)},         {"n", r.n},
          {"k", r.k},                          {"trials", r.trials},
          {"vanishing_ok", r.vanishing_ok},    {"roundtrip_ok", r.roundtrip_ok},
          {"restrict_ok", r.restrict_ok},      {"witnesses_ok", r.witnesses_ok},
          {"coeff_routes_agree", r.coeff_routes_agree}, {"surjectivity", "witnessed"},
          {"pass", r.pass},                    {"failures", r.failures}};
}

nlohmann::json to_json(const VanishingReport& r) {
  return {{"divisible", r.divisible},
          {"factors_divided", r.factors_divided},
          {"quotient_invariant", r.quotient_invariant},
          {"quotient", r.divisible ? r.quotient.str() : ""}};
}

nlohmann::json to_json(const CoeffReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [I, a] : r.route_a)
    rows.push_back({{"I", I},
                    {"route_a", to_fraction_string(a)},
                    {"route_b", to_fraction_string(r.route_b.at(I))},
                    {"degree", r.degrees.at(I)}});
  return {{"coefficients", rows},
          {"routes_agree", r.routes_agree},
          {"literal_disagreements", r.literal_disagreements}};
}

}  // namespace wr
