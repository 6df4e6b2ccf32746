#include "weylrestrict/geometry.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "weylrestrict/errors.hpp"
#include "weylrestrict/poly.hpp"

namespace wr {

bool HPolytope::contains(const CoordVector& x) const {
  if (static_cast<int>(x.size()) != dim) throw DimensionError("point has the wrong dimension");
  if (traceless && x.sum() != 0) return false;
  for (const auto& q : inequalities) {
    Rational v = dot(q.normal, x);
    if (q.strict ? v >= q.bound : v > q.bound) return false;
  }
  return true;
}

bool HPolytope::symmetric() const {
  std::set<std::pair<CoordVector, Rational>> all;
  for (const auto& q : inequalities) all.emplace(q.normal, q.bound);
  for (const auto& q : inequalities)
    if (!all.count({-q.normal, q.bound})) return false;
  return true;
}

Rational HPolytope::exit_scale(const CoordVector& y) const {
  bool found = false;
  Rational best;
  for (const auto& q : inequalities) {
    Rational v = dot(q.normal, y);
    if (v <= 0) continue;
    Rational t = q.bound / v;
    if (!found || t < best) best = t;
    found = true;
  }
  if (!found) throw std::invalid_argument("direction does not leave the polytope");
  return best;
}

HPolytope omega(const RootSystem& rs) {
  HPolytope p;
  p.dim = rs.ambient_dim;
  p.traceless = rs.type == ClassicalType::A;
  for (const auto& a : rs.roots) p.inequalities.push_back({a, rat(1, 2), true});
  return p;
}

namespace {

CoordVector reflect(const CoordVector& v, const CoordVector& a) {
  return v - a * (Rational(2) * dot(v, a) / dot(a, a));
}

// W-orbit of v, by closing under the simple reflections.
std::vector<CoordVector> orbit(const RootSystem& rs, const CoordVector& v) {
  std::set<CoordVector> seen{v};
  std::deque<CoordVector> todo{v};
  while (!todo.empty()) {
    CoordVector u = todo.front();
    todo.pop_front();
    for (const auto& a : rs.simple_roots) {
      CoordVector w = reflect(u, a);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

HPolytope omega_star(const RootSystem& rs) {
  if (rs.type == ClassicalType::A || rs.type == ClassicalType::C) return omega(rs);
  CoordVector sigma(rs.ambient_dim);
  for (const auto& a : rs.simple_roots) sigma += a * 2;
  HPolytope p;
  p.dim = rs.ambient_dim;
  for (const auto& s : orbit(rs, sigma)) p.inequalities.push_back({s, rat(1, 2), true});
  return p;
}

bool omega_membership(OmegaKind kind, const RootSystem& rs, const CoordVector& x) {
  return (kind == OmegaKind::Omega ? omega(rs) : omega_star(rs)).contains(x);
}

PointSampler::PointSampler(const RootSystem& rs, std::uint64_t seed)
    : dim_(rs.ambient_dim), traceless_(rs.type == ClassicalType::A), rng_(seed) {}

CoordVector PointSampler::next(const Rational& halfwidth) {
  Rational scaled = halfwidth * 1000;
  mpz_class top = scaled.get_num() / scaled.get_den();
  const long m = top.get_si();
  std::uniform_int_distribution<long> dist(-m, m);
  CoordVector x(dim_);
  const int free = traceless_ ? dim_ - 1 : dim_;
  for (int i = 0; i < free; ++i) x[i] = rat(dist(rng_), 1000);
  if (traceless_) x[dim_ - 1] = -x.sum();
  return x;
}

namespace {

// Nonnegative c1, c2 with c1 n1 + c2 n2 = a, if any.
std::optional<std::pair<Rational, Rational>> two_term(const CoordVector& a, const CoordVector& n1,
                                                      const CoordVector& n2) {
  const std::size_t N = a.size();
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) {
      Rational det = n1[p] * n2[q] - n1[q] * n2[p];
      if (det == 0) continue;
      Rational c1 = (a[p] * n2[q] - a[q] * n2[p]) / det;
      Rational c2 = (n1[p] * a[q] - n1[q] * a[p]) / det;
      if (c1 < 0 || c2 < 0) return std::nullopt;
      if (n1 * c1 + n2 * c2 != a) return std::nullopt;
      return std::make_pair(c1, c2);
    }
  return std::nullopt;
}

// Best witness for one root using one or two facets.
std::optional<Witness> find_witness(const CoordVector& a, const HPolytope& star) {
  std::optional<Witness> best;
  auto offer = [&](Witness w) {
    if (w.bound <= rat(1, 2) && (!best || w.bound < best->bound)) best = std::move(w);
  };
  const auto& qs = star.inequalities;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Rational s = dot(a, qs[i].normal) / dot(qs[i].normal, qs[i].normal);
    if (s > 0 && qs[i].normal * s == a) offer({a, {{i, s}}, s * qs[i].bound});
  }
  if (best) return best;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      auto c = two_term(a, qs[i].normal, qs[j].normal);
      if (!c || c->first == 0 || c->second == 0) continue;
      offer({a, {{i, c->first}, {j, c->second}}, c->first * qs[i].bound + c->second * qs[j].bound});
    }
  return best;
}

// Alternate box sizes so that both members near 0 and points near the
// boundary show up for every rank.
Rational coordinate_bound(ClassicalType t) { return t == ClassicalType::A ? rat(1, 2) : rat(1, 4); }

Rational halfwidth_for(std::size_t i, ClassicalType t) {
  static const long num[] = {1, 2, 4, 5};
  return coordinate_bound(t) * rat(num[i % 4], 4);
}

}  // namespace

OmegaSubsetReport check_omega_star_subset(ClassicalType t, int rank, std::size_t samples, std::uint64_t seed,
                                          bool permissive) {
  RootSystem rs = build_root_system(t, rank, permissive);
  OmegaSubsetReport rep;
  rep.type = t;
  rep.rank = rank;
  HPolytope om = omega(rs), star = omega_star(rs);

  auto marks = highest_root_marks(rs);
  rep.marks_le_two = std::all_of(marks.begin(), marks.end(), [](long m) { return m == 1 || m == 2; });
  rep.star_equals_omega = t == ClassicalType::A || t == ClassicalType::C;

  rep.certificate = true;
  for (const auto& a : rs.roots) {
    auto w = find_witness(a, star);
    if (!w) {
      rep.certificate = false;
      continue;
    }
    rep.witnesses.push_back(*w);
  }

  PointSampler sampler(rs, seed);
  std::vector<CoordVector> members;
  for (std::size_t i = 0; i < samples; ++i) {
    CoordVector x = sampler.next(halfwidth_for(i, t));
    ++rep.samples;
    if (!star.contains(x)) continue;
    ++rep.star_members;
    if (!om.contains(x)) ++rep.violations;
    if (members.size() < 64 && !x.is_zero()) members.push_back(x);
  }

  // Scale toward the first facet contact, along sampled points and root directions.
  std::vector<CoordVector> dirs = members;
  for (const auto& a : rs.positive_roots) dirs.push_back(a);
  const Rational inside = rat(999, 1000), outside = rat(1001, 1000);
  for (const auto& y : dirs) {
    Rational ts = star.exit_scale(y);
    rep.probes += 3;
    CoordVector in = y * (ts * inside);
    if (!star.contains(in)) ++rep.probe_failures;
    if (star.contains(in) && !om.contains(in)) ++rep.violations;
    if (star.contains(y * ts)) ++rep.probe_failures;
    if (star.contains(y * (ts * outside))) ++rep.probe_failures;
  }

  rep.pass = rep.certificate && rep.violations == 0 && rep.probe_failures == 0 && rep.marks_le_two &&
             star.symmetric() && om.symmetric();
  return rep;
}

nlohmann::json to_json(const OmegaSubsetReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [i, c] : x.terms) terms.push_back({{"facet", i}, {"coefficient", to_fraction_string(c)}});
    w.push_back({{"root", to_json(x.root)}, {"terms", terms}, {"bound", to_fraction_string(x.bound)}});
  }
  return {{"type", type_name(r.type)},
          {"rank", r.rank},
          {"marks_le_two", r.marks_le_two},
          {"certificate", r.certificate},
          {"witnesses", w},
          {"star_equals_omega", r.star_equals_omega},
          {"samples", r.samples},
          {"star_members", r.star_members},
          {"violations", r.violations},
          {"probes", r.probes},
          {"probe_failures", r.probe_failures},
          {"pass", r.pass}};
}

OmegaPropagationReport check_omega_star_propagation(const PropagationPair& pair, std::size_t samples,
                                                    std::uint64_t seed) {
  OmegaPropagationReport rep;
  rep.type = pair.type();
  rep.n = pair.n;
  rep.k = pair.k;
  HPolytope sn = omega_star(pair.small), sk = omega_star(pair.large);
  const bool typeA = rep.type == ClassicalType::A;
  const int N = pair.small.ambient_dim;

  if (typeA) {
    // sum_{j != i}(x_i - x_j) - (r+1) x_i + sum_j x_j vanishes identically.
    for (int i = 0; i < N; ++i) {
      Poly xi = Poly::variable(N, i), lhs(N), total(N);
      for (int j = 0; j < N; ++j) {
        total += Poly::variable(N, j);
        if (j != i) lhs += xi - Poly::variable(N, j);
      }
      if (!(lhs - xi * Rational(N) + total).is_zero()) rep.identity_holds = false;
    }
  }

  auto compare = [&](const CoordVector& x, std::size_t& bad) {
    bool in_small = sn.contains(x);
    if (in_small != sk.contains(pair.embedding.pad(x))) ++bad;
    if (in_small && typeA) {
      for (int r : {pair.n, pair.k})
        for (const auto& c : x) {
          Rational v = c * (r + 1);
          if (v < 0) v = -v;
          if (!(v < rat(r, 2))) ++rep.bound_failures;
        }
    }
    return in_small;
  };

  PointSampler sampler(pair.small, seed);
  std::vector<CoordVector> members;
  for (std::size_t i = 0; i < samples; ++i) {
    CoordVector x = sampler.next(halfwidth_for(i, rep.type));
    ++rep.samples;
    if (compare(x, rep.mismatches)) {
      ++rep.small_members;
      if (members.size() < 64 && !x.is_zero()) members.push_back(x);
    }
  }

  std::vector<CoordVector> dirs = members;
  for (const auto& a : pair.small.positive_roots) dirs.push_back(a);
  for (const auto& y : dirs) {
    Rational ts = sn.exit_scale(y);
    for (const Rational& f : {rat(999, 1000), Rational(1), rat(1001, 1000)}) {
      ++rep.probes;
      compare(y * (ts * f), rep.probe_mismatches);
    }
  }
  rep.pass = rep.mismatches == 0 && rep.probe_mismatches == 0 && rep.identity_holds && rep.bound_failures == 0;
  return rep;
}

nlohmann::json to_json(const OmegaPropagationReport& r) {
  nlohmann::json j{{"type", type_name(r.type)},
                   {"n", r.n},
                   {"k", r.k},
                   {"samples", r.samples},
                   {"small_members", r.small_members},
                   {"mismatches", r.mismatches},
                   {"probes", r.probes},
                   {"probe_mismatches", r.probe_mismatches},
                   {"pass", r.pass}};
  if (r.type == ClassicalType::A) {
    j["identity_holds"] = r.identity_holds;
    j["bound_failures"] = r.bound_failures;
  }
  return j;
}

bool sqrt_less(const SqrtValue& a, const SqrtValue& b) {
  return a.coefficient * a.coefficient * a.radicand < b.coefficient * b.coefficient * b.radicand;
}

std::string RadiusReport::str() const {
  if (radius.coefficient == 0) return "0";
  std::string c = radius.coefficient == 1 ? "" : to_short_string(radius.coefficient) + "*";
  if (radius.radicand == 1) return c + "pi";
  return c + "sqrt(" + std::to_string(radius.radicand) + ")*pi";
}

RadiusReport injectivity_radius(ClassicalType t, int rank, bool permissive) {
  RootSystem rs = build_root_system(t, rank, permissive);
  if (rs.simple_roots.empty()) throw RankError("no simple roots, radius undefined");
  RadiusReport rep;
  rep.type = t;
  rep.rank = rank;
  rep.coroot_lengths = coroot_lengths(rs);
  rep.radius = rep.coroot_lengths.front();
  for (const auto& l : rep.coroot_lengths)
    if (sqrt_less(l, rep.radius)) rep.radius = l;
  return rep;
}

nlohmann::json to_json(const RadiusReport& r) {
  nlohmann::json lens = nlohmann::json::array();
  for (const auto& l : r.coroot_lengths) lens.push_back(l.str());
  return {{"type", type_name(r.type)},
          {"rank", r.rank},
          {"coroot_lengths", lens},
          {"radius", r.str()},
          {"radius_coefficient", to_fraction_string(r.radius.coefficient)},
          {"radius_radicand", r.radius.radicand}};
}

SqrtValue support_radius_bound(ClassicalType t, int rank, bool permissive) {
  RootSystem rs = build_root_system(t, rank, permissive);
  HPolytope star = omega_star(rs);
  // Distance to <n, x> = b under the metric s * dot is b sqrt(s) / |n|.
  std::optional<Rational> best;
  for (const auto& q : star.inequalities) {
    Rational d2 = q.bound * q.bound * rs.metric_scale / dot(q.normal, q.normal);
    if (!best || d2 < *best) best = d2;
  }
  return exact_sqrt(best.value_or(Rational(0)));
}

}  // namespace wr
