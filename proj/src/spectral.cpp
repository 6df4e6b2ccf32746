#include "weylrestrict/spectral.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weylrestrict/errors.hpp"
#include "weylrestrict/weyl.hpp"

namespace wr {

Rational varpi(const RootSystem& rs, const CoordVector& v) {
  Rational p = 1;
  for (const auto& a : rs.positive_roots) p *= dot(v, a);
  return p;
}

void require_dominant_integral(const RootSystem& rs, const CoordVector& mu) {
  if (static_cast<int>(mu.size()) != rs.ambient_dim) throw DimensionError("weight has the wrong dimension");
  if (rs.type == ClassicalType::A && mu.sum() != 0) throw WeightError("type A weights must be traceless");
  if (!rs.is_integral(mu)) throw WeightError("weight " + mu.str() + " is not integral");
  if (!rs.is_dominant(mu)) throw WeightError("weight " + mu.str() + " is not dominant");
}

long weyl_dim(const RootSystem& rs, const CoordVector& mu) {
  require_dominant_integral(rs, mu);
  Rational d = varpi(rs, mu + rs.rho) / varpi(rs, rs.rho);
  if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer");
  return to_long(d);
}

CoordVector weight_from_labels(const RootSystem& rs, const std::vector<long>& labels) {
  auto fw = fundamental_weights(rs);
  if (labels.size() != fw.size()) throw DimensionError("need one Dynkin label per simple root");
  CoordVector mu(rs.ambient_dim);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] < 0) throw WeightError("Dynkin labels must be nonnegative");
    mu += fw[j] * Rational(labels[j]);
  }
  return mu;
}

namespace {

CoordVector reflect(const CoordVector& v, const CoordVector& a) {
  return v - a * (Rational(2) * dot(v, a) / dot(a, a));
}

}  // namespace

std::vector<CoordVector> weyl_orbit(const RootSystem& rs, const CoordVector& v) {
  std::set<CoordVector> seen{v};
  std::deque<CoordVector> todo{v};
  while (!todo.empty()) {
    CoordVector u = std::move(todo.front());
    todo.pop_front();
    for (const auto& a : rs.simple_roots) {
      CoordVector w = reflect(u, a);
      if (seen.insert(w).second) todo.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

CoordVector dominant_representative(const RootSystem& rs, const CoordVector& v) {
  CoordVector u = v;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& a : rs.simple_roots)
      if (dot(u, a) < 0) {
        u = reflect(u, a);
        moved = true;
      }
  }
  return u;
}

WeightMultiset dominant_multiplicities(const RootSystem& rs, const CoordVector& mu, std::size_t cap) {
  require_dominant_integral(rs, mu);
  // Dominant weights below mu: every one is reached from mu by subtracting
  // positive roots through dominant weights only.
  std::map<CoordVector, long> level;  // depth = height of mu - nu
  level[mu] = 0;
  std::deque<CoordVector> todo{mu};
  while (!todo.empty()) {
    CoordVector nu = todo.front();
    todo.pop_front();
    for (const auto& a : rs.positive_roots) {
      CoordVector lower = nu - a;
      if (!rs.is_dominant(lower) || level.count(lower)) continue;
      Rational h = 0;
      for (const auto& c : rs.simple_coordinates(mu - lower)) h += c;
      level[lower] = to_long(h);
      if (level.size() > cap) throw CapExceededError("too many dominant weights", level.size());
      todo.push_back(lower);
    }
  }
  std::vector<std::pair<long, CoordVector>> order;
  for (const auto& [nu, h] : level) order.emplace_back(h, nu);
  std::sort(order.begin(), order.end());

  WeightMultiset mult;
  const CoordVector lr = mu + rs.rho;
  const Rational top = dot(lr, lr);
  for (const auto& [h, nu] : order) {
    if (h == 0) {
      mult[nu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : rs.positive_roots)
      for (long j = 1;; ++j) {
        CoordVector up = nu + a * Rational(j);
        auto it = mult.find(dominant_representative(rs, up));
        if (it == mult.end()) break;
        sum += dot(up, a) * Rational(it->second);
      }
    CoordVector nr = nu + rs.rho;
    Rational m = 2 * sum / (top - dot(nr, nr));
    if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal recursion produced " + to_short_string(m));
    if (m > 0) mult[nu] = to_long(m);
  }
  return mult;
}

WeightMultiset freudenthal_weights(const RootSystem& rs, const CoordVector& mu, std::size_t cap) {
  WeightMultiset all;
  for (const auto& [nu, m] : dominant_multiplicities(rs, mu, cap))
    for (const auto& w : weyl_orbit(rs, nu)) {
      all[w] = m;
      if (all.size() > cap) throw CapExceededError("too many weights", all.size());
    }
  return all;
}

long total_multiplicity(const WeightMultiset& m) {
  long t = 0;
  for (const auto& [w, c] : m) t += c;
  return t;
}

BranchResult branch(const PropagationPair& pair, const CoordVector& mu, std::size_t cap) {
  BranchResult out;
  out.large_dim = weyl_dim(pair.large, mu);
  WeightMultiset rest;
  for (const auto& [w, m] : freudenthal_weights(pair.large, mu, cap)) rest[pair.restrict_weight(w)] += m;
  const CoordVector& rho = pair.small.rho;

  while (!rest.empty()) {
    auto best = rest.begin();
    Rational best_h = dot(best->first, rho);
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      Rational h = dot(it->first, rho);
      if (h > best_h || (h == best_h && best->first < it->first)) {
        best = it;
        best_h = h;
      }
    }
    const CoordVector top = best->first;
    const long m = best->second;
    if (!pair.small.is_dominant(top)) throw BranchingError("highest remaining weight " + top.str() + " is not dominant");
    out.components[top] += m;
    out.order.push_back(top);
    for (const auto& [w, c] : freudenthal_weights(pair.small, top, cap)) {
      auto it = rest.find(w);
      long left = (it == rest.end() ? 0 : it->second) - m * c;
      if (left < 0) throw BranchingError("negative multiplicity at " + w.str());
      if (left == 0) rest.erase(it);
      else it->second = left;
    }
  }
  for (const auto& [nu, m] : out.components) out.bookkeeping += m * weyl_dim(pair.small, nu);
  return out;
}

nlohmann::json to_json(const WeightMultiset& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [w, c] : m) a.push_back({{"weight", to_json(w)}, {"multiplicity", c}});
  return a;
}

nlohmann::json to_json(const BranchResult& b) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& nu : b.order) comps.push_back({{"weight", to_json(nu)}, {"multiplicity", b.components.at(nu)}});
  return {{"components", comps}, {"large_dim", b.large_dim}, {"bookkeeping", b.bookkeeping},
          {"balanced", b.bookkeeping == b.large_dim}};
}

// ---------------------------------------------------------------------------
// Characters

namespace {

Exponent doubled(const CoordVector& v) {
  Exponent e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational d = v[i] * 2;
    if (!is_integer(d)) throw WeightError("weight " + v.str() + " is not on the doubled lattice");
    e[i] = static_cast<int>(to_long(d));
  }
  return e;
}

CoordVector gl_lift(const RootSystem& rs, const CoordVector& v) {
  if (rs.type != ClassicalType::A) return v;
  CoordVector u = v;
  Rational first = v[0];
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= first;
  return u;
}

}  // namespace

Poly weyl_numerator(const RootSystem& rs, const CoordVector& lambda) {
  WeylGroup w(rs);
  Poly n(rs.ambient_dim, true);
  for (const auto& g : w.elements()) n.add_term(doubled(g.apply(lambda)), g.det());
  return n;
}

Poly weyl_denominator(const RootSystem& rs) {
  Poly d = Poly::constant(rs.ambient_dim, 1, true);
  for (const auto& a : rs.positive_roots) {
    Exponent e = doubled(a * rat(1, 2));
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    d = d * (Poly::monomial(e, 1, true) - Poly::monomial(ne, 1, true));
  }
  return d;
}

Poly weyl_character(const RootSystem& rs, const CoordVector& mu) {
  require_dominant_integral(rs, mu);
  CoordVector lambda = gl_lift(rs, mu + rs.rho);
  Poly q = weyl_numerator(rs, lambda);
  // One binomial factor at a time keeps the divisions cheap.
  for (const auto& a : rs.positive_roots) {
    Exponent e = doubled(a * rat(1, 2)), ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    q = exact_divide(q, Poly::monomial(e, 1, true) - Poly::monomial(ne, 1, true));
  }
  if (rs.type == ClassicalType::A) {
    // The quotient is a^{-(mu_1 + rho_1)(1, ..., 1)} chi_mu; bring it to the
    // gl character of mu - mu_1 (1, ..., 1).
    q = q.mul_monomial(doubled(rs.rho - gl_lift(rs, rs.rho)), 1);
  }
  return q;
}

Rational character_dimension(const Poly& chi) {
  Rational t = 0;
  for (const auto& [e, c] : chi.terms()) t += c;
  return t;
}

SigmaReport check_sigma_equivariance(int rank, const CoordVector& lambda, bool permissive) {
  RootSystem rs = build_root_system(ClassicalType::D, rank, permissive);
  if (static_cast<int>(lambda.size()) != rs.ambient_dim) throw DimensionError("lambda has the wrong dimension");
  SigmaReport rep;
  rep.rank = rank;
  rep.lambda = lambda;
  SignedPerm sigma = SignedPerm::sign_change(rank, 0);
  rep.sigma_lambda = sigma.apply(lambda);
  rep.sigma_fixes_lambda = rep.sigma_lambda == lambda;

  std::set<CoordVector> pos(rs.positive_roots.begin(), rs.positive_roots.end()), moved;
  for (const auto& a : rs.positive_roots) moved.insert(sigma.apply(a));
  rep.sigma_permutes_positive_roots = pos == moved;
  rep.sigma_swaps_first_simple_roots = rank >= 2 && sigma.apply(rs.simple_roots[0]) == rs.simple_roots[1] &&
                                       sigma.apply(rs.simple_roots[1]) == rs.simple_roots[0];

  // f(s^-1 a) as a function of a has exponents moved by s.
  Poly n_lambda = weyl_numerator(rs, lambda), n_sigma = weyl_numerator(rs, rep.sigma_lambda);
  Poly d = weyl_denominator(rs), d_moved = act_on_exponents(d, sigma);
  Poly lhs = act_on_exponents(n_lambda, sigma) * d;
  rep.identity_holds = lhs == n_sigma * d_moved;

  auto orbit = weyl_orbit(rs, lambda);
  rep.control_applicable = !std::binary_search(orbit.begin(), orbit.end(), rep.sigma_lambda);
  rep.control_identity_holds = lhs == n_lambda * d_moved;
  rep.pass = rep.identity_holds && rep.sigma_permutes_positive_roots && rep.sigma_swaps_first_simple_roots &&
             (!rep.control_applicable || !rep.control_identity_holds);
  return rep;
}

nlohmann::json to_json(const SigmaReport& r) {
  return {{"rank", r.rank},
          {"lambda", to_json(r.lambda)},
          {"sigma_lambda", to_json(r.sigma_lambda)},
          {"sigma_fixes_lambda", r.sigma_fixes_lambda},
          {"sigma_permutes_positive_roots", r.sigma_permutes_positive_roots},
          {"sigma_swaps_first_simple_roots", r.sigma_swaps_first_simple_roots},
          {"identity_holds", r.identity_holds},
          {"control_applicable", r.control_applicable},
          {"control_identity_holds", r.control_identity_holds},
          {"pass", r.pass}};
}

}  // namespace wr
