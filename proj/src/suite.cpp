#include "weylrestrict/suite.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "weylrestrict/geometry.hpp"
#include "weylrestrict/invariants.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/pwtransform.hpp"
#include "weylrestrict/spectral.hpp"
#include "weylrestrict/weyl.hpp"

namespace wr {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

namespace {

using nlohmann::json;

constexpr ClassicalType kTypes[] = {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D};

// Hard caps per family keep a large --max-rank from running away.
constexpr int kRestrictionCap = 5;
constexpr int kInvariantCap = 6;
constexpr int kOmegaCap = 6;
constexpr int kXiCap = 6;
constexpr int kDimensionCap = 4;
constexpr int kBranchingCap = 3;
constexpr int kVanishingCap = 3;
constexpr int kProjectiveCap = 4;
constexpr int kGroupCaseCap = 3;
constexpr int kRadiusTop = 8;
constexpr int kDimensionWeights = 20;

// Lowest rank the checks accept: the standard realizations make sense from
// rank 1 (rank 2 for D, whose rank-1 system has no roots).
int low_rank(ClassicalType t) { return t == ClassicalType::D ? 2 : 1; }

std::uint64_t item_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

std::vector<ClassicalType> types(const SuiteParams& p, std::initializer_list<ClassicalType> allowed) {
  std::vector<ClassicalType> out;
  for (ClassicalType t : allowed)
    if (!p.type || *p.type == t) out.push_back(t);
  return out;
}

std::vector<int> ranks(const SuiteParams& p, int lo, int cap) {
  if (p.rank) return {*p.rank};
  std::vector<int> out;
  for (int r = lo; r <= std::min(p.max_rank, cap); ++r) out.push_back(r);
  return out;
}

std::vector<std::pair<int, int>> pairs(const SuiteParams& p, int lo, int cap) {
  if (p.n && p.k) return {{*p.n, *p.k}};
  std::vector<std::pair<int, int>> out;
  int top = std::min(p.max_rank, cap);
  for (int k = lo + 1; k <= top; ++k)
    for (int n = lo; n < k; ++n)
      if ((!p.n || *p.n == n) && (!p.k || *p.k == k)) out.push_back({n, k});
  return out;
}

std::string tn(ClassicalType t) { return type_name(t); }

json pair_params(ClassicalType t, int n, int k) { return {{"type", tn(t)}, {"n", n}, {"k", k}}; }
json rank_params(ClassicalType t, int r) { return {{"type", tn(t)}, {"rank", r}}; }

VerificationReport finish(bool pass, json witness, std::string summary = {}) {
  VerificationReport r;
  r.status = pass ? Status::Pass : Status::Fail;
  r.witness = std::move(witness);
  r.summary = std::move(summary);
  return r;
}

void add(std::vector<CheckSpec>& out, std::string id, json params, std::uint64_t seed,
         std::function<VerificationReport(std::uint64_t)> body) {
  std::uint64_t s = item_seed(seed, id);
  out.push_back({id, params, [id, params, s, body] {
                   VerificationReport r;
                   try {
                     r = body(s);
                   } catch (const std::exception& e) {
                     r = finish(false, {{"exception", e.what()}}, e.what());
                   }
                   r.id = id;
                   r.params = params;
                   r.seed = s;
                   return r;
                 }});
}

std::string pair_id(const std::string& family, ClassicalType t, int n, int k) {
  return family + "/" + tn(t) + "/" + std::to_string(n) + "-" + std::to_string(k);
}

// --- individual families -------------------------------------------------

void restriction_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C}))
    for (auto [n, k] : pairs(p, 1, kRestrictionCap))
      add(out, pair_id("restriction", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t) {
        auto r = check_restriction_theorem(t, n, k);
        return finish(r.pass, to_json(r), r.pass ? "" : r.detail);
      });
}

void d_strictness_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  if (p.type && *p.type != ClassicalType::D) return;
  std::vector<std::pair<int, int>> ps = {{4, 5}, {4, 6}, {5, 6}};
  if (p.n && p.k) ps = {{*p.n, *p.k}};
  for (auto [n, k] : ps)
    add(out, pair_id("d-strictness", ClassicalType::D, n, k), pair_params(ClassicalType::D, n, k), p.seed,
        [n, k](std::uint64_t) {
          auto plain = check_restriction_theorem(ClassicalType::D, n, k, false);
          auto ext = check_restriction_theorem(ClassicalType::D, n, k, true);
          bool ok = plain.pass && ext.pass;
          return finish(ok, {{"plain", to_json(plain)}, {"extended", to_json(ext)}},
                        ok ? "" : "restricted stabilizer is not the extended group");
        });
}

void invariant_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}))
    for (auto [n, k] : pairs(p, 1, kInvariantCap)) {
      add(out, pair_id("invariants", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t) {
        auto r = check_surjectivity(t, n, k);
        return finish(r.pass, to_json(r), r.pass ? "" : "restriction identities fail");
      });
      if (t == ClassicalType::D && n < k)
        add(out, pair_id("pfaffian", t, n, k), pair_params(t, n, k), p.seed, [n, k](std::uint64_t) {
          auto r = check_surjectivity(ClassicalType::D, n, k);
          bool ok = r.restricted_even && r.pfaffian_odd && r.det_identity;
          json w = {{"restricted_even", r.restricted_even},
                    {"pfaffian_odd", r.pfaffian_odd},
                    {"det_identity", r.det_identity},
                    {"pfaffian_in_image", !ok}};
          return finish(ok, w, ok ? "" : "parity dichotomy fails");
        });
    }
}

void radius_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : kTypes) {
    if (p.type && *p.type != t) continue;
    std::vector<int> rs;
    if (p.rank) rs = {*p.rank};
    else
      for (int r = 1; r <= kRadiusTop; ++r) rs.push_back(r);
    add(out, "radius/" + tn(t), {{"type", tn(t)}, {"ranks", rs}}, p.seed, [t, rs](std::uint64_t) {
      bool sqrt2 = t == ClassicalType::A || t == ClassicalType::C;
      json rows = json::array();
      bool ok = true;
      int checked = 0;
      for (int r : rs) {
        if (r < min_rank(t)) {
          // B1 and C1, C2, D2, D3 coincide with other families; D1 has no roots.
          json row = {{"rank", r}, {"status", "out of family"}};
          if (r >= low_rank(t)) row["radius"] = injectivity_radius(t, r).str();
          rows.push_back(row);
          continue;
        }
        auto rr = injectivity_radius(t, r, false);
        bool good = sqrt2 ? (rr.radius == SqrtValue{Rational(1), 2}) : (rr.radius == SqrtValue{Rational(2), 1});
        ok = ok && good;
        ++checked;
        rows.push_back({{"rank", r}, {"radius", rr.str()}, {"expected", sqrt2 ? "sqrt(2)*pi" : "2*pi"}});
      }
      if (checked == 0) {
        VerificationReport s;
        s.status = Status::Skipped;
        s.summary = "no rank inside the family";
        s.witness = {{"ranks", rows}};
        return s;
      }
      std::string head = std::string("R = ") + (sqrt2 ? "sqrt(2)*pi" : "2*pi") + " for ranks " +
                         std::to_string(std::max(min_rank(t), rs.front())) + ".." + std::to_string(rs.back());
      return finish(ok, {{"expected", sqrt2 ? "sqrt(2)*pi" : "2*pi"}, {"ranks", rows}},
                    ok ? head : "radius differs from the expected value");
    });
  }
}

void omega_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})) {
    std::size_t samples = p.samples;
    for (int r : ranks(p, min_rank(t), kOmegaCap))
      add(out, "omega-subset/" + tn(t) + "/" + std::to_string(r), rank_params(t, r), p.seed,
          [t, r, samples](std::uint64_t s) {
            auto rep = check_omega_star_subset(t, r, samples, s, false);
            return finish(rep.pass, to_json(rep),
                          rep.pass ? "" : std::to_string(rep.violations) + " violations");
          });
    for (auto [n, k] : pairs(p, min_rank(t), kOmegaCap))
      add(out, pair_id("omega-propagation", t, n, k), pair_params(t, n, k), p.seed,
          [t, n, k, samples](std::uint64_t s) {
            auto rep = check_omega_star_propagation(make_pair(t, n, k, false), samples, s);
            return finish(rep.pass, to_json(rep),
                          rep.pass ? "" : std::to_string(rep.mismatches) + " mismatches");
          });
  }
}

void xi_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}))
    for (auto [n, k] : pairs(p, low_rank(t), kXiCap))
      add(out, pair_id("xi", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t) {
        auto r = check_xi_restriction(make_pair(t, n, k));
        return finish(r.pass, to_json(r), r.pass ? "" : "class-one weights do not propagate");
      });
}

// The first `count` label vectors ordered by label sum, then lexicographically.
std::vector<std::vector<long>> first_labels(int rank, int count) {
  std::vector<std::vector<long>> out;
  for (long total = 0; static_cast<int>(out.size()) < count; ++total) {
    std::vector<long> cur(static_cast<std::size_t>(rank), 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
      if (static_cast<int>(out.size()) >= count) return;
      if (i == rank - 1) {
        cur[static_cast<std::size_t>(i)] = left;
        out.push_back(cur);
        return;
      }
      for (long v = left; v >= 0; --v) {
        cur[static_cast<std::size_t>(i)] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

void dimension_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}))
    for (int r : ranks(p, low_rank(t), kDimensionCap))
      add(out, "dimension/" + tn(t) + "/" + std::to_string(r), rank_params(t, r), p.seed, [t, r](std::uint64_t) {
        RootSystem rs = build_root_system(t, r, true);
        json bad = json::array();
        long largest = 0;
        auto labels = first_labels(r, kDimensionWeights);
        for (const auto& l : labels) {
          CoordVector mu = weight_from_labels(rs, l);
          long d = weyl_dim(rs, mu);
          long f = total_multiplicity(freudenthal_weights(rs, mu));
          largest = std::max(largest, d);
          if (d != f) bad.push_back({{"labels", l}, {"weyl", d}, {"freudenthal", f}});
        }
        bool ok = bad.empty();
        json w = {{"weights", labels.size()}, {"largest_dimension", largest}};
        if (!ok) w["mismatches"] = bad;
        return finish(ok, w, ok ? "" : std::to_string(bad.size()) + " dimension mismatches");
      });
}

void branching_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}))
    for (auto [n, k] : pairs(p, low_rank(t), kBranchingCap))
      add(out, pair_id("branching", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t) {
        PropagationPair pair = make_pair(t, n, k);
        json rows = json::array();
        bool mult_one = true, books = true;
        for (const auto& I : i_vectors(n, 2)) {
          std::vector<long> Ik(I);
          Ik.resize(static_cast<std::size_t>(k), 0);
          CoordVector mk = class_one_weight(pair.large, Ik);
          CoordVector mn = class_one_weight(pair.small, I);
          BranchResult b = branch(pair, mk);
          auto it = b.components.find(mn);
          long m = it == b.components.end() ? 0 : it->second;
          bool ok = m == 1 && b.bookkeeping == b.large_dim;
          mult_one = mult_one && m == 1;
          books = books && b.bookkeeping == b.large_dim;
          json row = {{"I", I}, {"multiplicity", m}, {"large_dim", b.large_dim}, {"bookkeeping", b.bookkeeping}};
          if (!ok) row["components"] = to_json(b.components);
          rows.push_back(row);
        }
        bool ok = mult_one && books;
        std::string why;
        if (!mult_one) why = "class-one constituent has multiplicity other than 1";
        if (!books) why += std::string(why.empty() ? "" : "; ") + "dimension bookkeeping fails";
        return finish(ok, {{"weights", rows}, {"bookkeeping", books}}, why);
      });
}

void pw_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  int trials = p.trials;
  int inputs = std::max(1, p.trials / 2);
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})) {
    int lo = low_rank(t);
    for (int r : ranks(p, lo, kVanishingCap))
      add(out, "pw-vanishing/" + tn(t) + "/" + std::to_string(r), rank_params(t, r), p.seed,
          [t, r, trials](std::uint64_t s) {
            RootSystem rs = build_root_system(t, r, true);
            std::mt19937_64 rng(s);
            int vanish = 0, round = 0;
            json bad = json::array();
            for (int i = 0; i < trials; ++i) {
              RhoAltPoly phi = random_rho_alt(rs, false, rng);
              auto v = vanishing_check(phi);
              bool vok = v.divisible && v.quotient_invariant;
              bool rok = false;
              if (vok) {
                ++vanish;
                rok = T_inv(rs, false, T_op(phi)).psi == phi.psi;
                if (rok) ++round;
              }
              if (!vok || !rok) bad.push_back({{"trial", i}, {"phi", phi.phi.str()}, {"vanishing", vok}, {"round_trip", rok}});
            }
            bool ok = bad.empty();
            json w = {{"polynomials", trials}, {"vanishing_ok", vanish}, {"round_trip_ok", round}};
            if (!ok) w["failures"] = bad;
            return finish(ok, w, ok ? "" : "vanishing or round trip fails");
          });
    // Chains n < m < k.
    if (!p.n || !p.k) {
      int top = std::min(p.max_rank, kProjectiveCap);
      for (int k = lo + 2; k <= top; ++k)
        for (int m = lo + 1; m < k; ++m)
          for (int n = lo; n < m; ++n) {
            if ((p.n && *p.n != n) || (p.k && *p.k != k)) continue;
            std::string id = "pw-projective/" + tn(t) + "/" + std::to_string(n) + "-" + std::to_string(m) + "-" +
                             std::to_string(k);
            add(out, id, {{"type", tn(t)}, {"n", n}, {"m", m}, {"k", k}}, p.seed, [t, n, m, k, inputs](std::uint64_t s) {
              auto pkn = make_pair(t, n, k), pkm = make_pair(t, m, k), pmn = make_pair(t, n, m);
              std::mt19937_64 rng(s);
              json bad = json::array();
              for (int i = 0; i < inputs; ++i) {
                RhoAltPoly phi = random_rho_alt(pkn.large, false, rng);
                if (!(P_restrict(pkn, phi).psi == P_restrict(pmn, P_restrict(pkm, phi)).psi))
                  bad.push_back({{"input", i}, {"phi", phi.phi.str()}});
              }
              bool ok = bad.empty();
              json w = {{"inputs", inputs}};
              if (!ok) w["failures"] = bad;
              return finish(ok, w, ok ? "" : "P is not projective");
            });
          }
    }
    for (auto [n, k] : pairs(p, lo, kProjectiveCap)) {
      add(out, pair_id("pw-coeff", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t s) {
        auto pair = make_pair(t, n, k);
        std::mt19937_64 rng(s);
        Poly F = random_invariant(pair.large, rng, 4);
        auto r = C_coeff(pair, F, 3);
        json w = to_json(r);
        w["F"] = F.str();
        return finish(r.routes_agree, w, r.routes_agree ? "" : "evaluation routes disagree");
      });
      add(out, pair_id("pw-witness", t, n, k), pair_params(t, n, k), p.seed, [t, n, k](std::uint64_t s) {
        auto pair = make_pair(t, n, k);
        std::mt19937_64 rng(s);
        RhoAltPoly phin = random_rho_alt(pair.small, small_side_extended(pair, false), rng);
        auto w = surjectivity_witness(pair, phin);
        json j = {{"lifted", w.lifted}, {"maps_back", w.maps_back}, {"status", w.status}, {"phi_n", phin.phi.str()}};
        return finish(w.maps_back, j, w.maps_back ? "" : w.status);
      });
    }
  }
}

void sigma_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  if (p.type && *p.type != ClassicalType::D) return;
  int r = p.rank.value_or(4);
  std::string base = "sigma/D" + std::to_string(r) + "/";
  auto one = [&](const std::string& name, CoordVector lambda) {
    json params = {{"type", "D"}, {"rank", r}, {"lambda", to_json(lambda)}};
    add(out, base + name, params, p.seed, [r, lambda](std::uint64_t) {
      auto rep = check_sigma_equivariance(r, lambda);
      return finish(rep.pass, to_json(rep), rep.pass ? "" : "sigma identity or its control misbehaves");
    });
  };
  RootSystem rs = build_root_system(ClassicalType::D, r, true);
  if (p.lambda) {
    one("custom", CoordVector::from_ints(*p.lambda));
    return;
  }
  auto xs = class_one_weights(rs);
  one("rho", rs.rho);
  one("rho+xi1", rs.rho + xs.front());
  one("rho+xi" + std::to_string(r), rs.rho + xs.back());
}

void negative_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  if (p.type && *p.type != ClassicalType::B) return;
  // B3 with alpha_1 removed: W(B3) restricted to the remaining A2 contains -id.
  add(out, "negative-example/B3", {{"type", "B"}, {"rank", 3}, {"removed", {1}}, {"expect", "inequality"}}, p.seed,
      [](std::uint64_t) {
        auto r = check_levi_restriction(ClassicalType::B, 3, {1});
        bool minus_id = std::any_of(r.components.begin(), r.components.end(),
                                    [](const auto& c) { return c.minus_identity_in_restriction; });
        bool detected = !r.equal && minus_id;
        std::string head = "restricted stabilizer order " + std::to_string(r.restricted_order) +
                           " exceeds the small Weyl group order " + std::to_string(r.small_weyl_order) + ", as expected";
        return finish(detected, to_json(r),
                      detected ? head : "expected the restricted stabilizer to exceed the small Weyl group");
      });
}

void group_case_checks(const SuiteParams& p, std::vector<CheckSpec>& out) {
  for (ClassicalType t : types(p, {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}))
    for (int r : ranks(p, low_rank(t), kGroupCaseCap))
      add(out, "group-case/" + tn(t) + "/" + std::to_string(r), rank_params(t, r), p.seed, [t, r](std::uint64_t) {
        auto g = check_group_case(t, r);
        json w = {{"stabilizer_order", g.stabilizer_order},
                  {"restricted_order", g.restricted_order},
                  {"weyl_ok", g.weyl_ok},
                  {"invariants_ok", g.invariants_ok}};
        bool ok = g.weyl_ok && g.invariants_ok;
        return finish(ok, w, ok ? "" : "diagonal restriction fails");
      });
}

}  // namespace

std::vector<CheckSpec> build_matrix(const SuiteParams& p) {
  std::vector<CheckSpec> out;
  restriction_checks(p, out);
  d_strictness_checks(p, out);
  invariant_checks(p, out);
  radius_checks(p, out);
  omega_checks(p, out);
  xi_checks(p, out);
  dimension_checks(p, out);
  branching_checks(p, out);
  pw_checks(p, out);
  sigma_checks(p, out);
  negative_checks(p, out);
  group_case_checks(p, out);
  std::sort(out.begin(), out.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return out;
}

std::vector<CheckSpec> select_checks(const std::vector<CheckSpec>& all, const std::string& filter) {
  std::vector<std::string> globs;
  std::stringstream ss(filter);
  for (std::string g; std::getline(ss, g, '|');)
    if (!g.empty()) globs.push_back(g);
  std::vector<CheckSpec> out;
  for (const auto& c : all)
    for (const auto& g : globs)
      if (fnmatch(g.c_str(), c.id.c_str(), 0) == 0) {
        out.push_back(c);
        break;
      }
  if (out.empty()) throw UnknownCheckError("no check matches '" + filter + "'");
  return out;
}

std::vector<VerificationReport> run_checks(const std::vector<CheckSpec>& checks, unsigned threads) {
  std::vector<VerificationReport> out(checks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      out[i] = checks[i].run();
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<VerificationReport> run_suite(const std::string& filter, const SuiteParams& p) {
  return run_checks(select_checks(build_matrix(p), filter), p.threads);
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::Fail; });
}

nlohmann::json to_json(const VerificationReport& r) {
  json j = {{"id", r.id}, {"params", r.params}, {"status", status_name(r.status)}, {"seed", r.seed}};
  if (!r.summary.empty()) j["summary"] = r.summary;
  j["witness"] = r.witness;
  return j;
}

nlohmann::json suite_json(const std::vector<VerificationReport>& reports, const SuiteParams& p,
                          const std::string& command) {
  json params = {{"max_rank", p.max_rank}, {"samples", p.samples}, {"trials", p.trials}, {"seed", p.seed}};
  if (p.type) params["type"] = type_name(*p.type);
  if (p.n) params["n"] = *p.n;
  if (p.k) params["k"] = *p.k;
  if (p.rank) params["rank"] = *p.rank;
  if (p.lambda) params["lambda"] = *p.lambda;
  std::size_t pass = 0, fail = 0, skipped = 0;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Fail) ++fail;
    else ++skipped;
  }
  return {{"schema", kReportSchema},
          {"command", command},
          {"params", params},
          {"reports", list},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

std::string suite_table(const std::vector<VerificationReport>& reports, bool with_timing) {
  std::size_t width = 10;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  std::size_t fail = 0;
  for (const auto& r : reports) {
    os << std::left << std::setw(8) << status_name(r.status) << std::setw(static_cast<int>(width) + 2) << r.id;
    if (with_timing) os << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s";
    if (!r.summary.empty()) os << "  " << r.summary;
    os << "\n";
    if (r.status == Status::Fail) ++fail;
  }
  os << reports.size() << " checks, " << fail << " failed\n";
  return os.str();
}

}  // namespace wr
