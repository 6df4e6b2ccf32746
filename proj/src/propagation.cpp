#include "weylrestrict/propagation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "weylrestrict/errors.hpp"

namespace wr {

CoordVector PropagationPair::restrict_weight(const CoordVector& v) const {
  return small.project(embedding.truncate(v));
}

PropagationPair make_pair(ClassicalType t, int n, int k, bool permissive) {
  if (n > k) throw RankError("propagation pair needs n <= k");
  PropagationPair pair{build_root_system(t, n, permissive), build_root_system(t, k, permissive), {}, n, k};
  pair.embedding = make_embedding(pair.small, pair.large);
  for (std::size_t j = 0; j < pair.small.simple_roots.size(); ++j)
    if (pair.restrict_weight(pair.large.simple_roots[j]) != pair.small.simple_roots[j])
      throw std::logic_error("simple root " + std::to_string(j + 1) + " does not restrict correctly");
  return pair;
}

std::vector<PropagationPair> make_product_pairs(const std::vector<FactorSpec>& factors, bool permissive) {
  std::vector<PropagationPair> out;
  for (const auto& f : factors) out.push_back(make_pair(f.type, f.n, f.k, permissive));
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct FamilyInfo {
  Family family;
  const char* label;
  int row;
  bool two_params;
  const char* g_noncompact;
  const char* g_compact;
  const char* k;
  const char* rank_formula;
  const char* dim_formula;
  const char* sigma_half_rule;
  const char* rule;
};

const FamilyInfo kFamilies[] = {
    {Family::A, "A_j", 1, false, "SL(j,C)", "SU(j)xSU(j)", "diag SU(j)", "j-1", "j^2-1", "A", "group"},
    {Family::B, "B_j", 2, false, "SO(2j+1,C)", "SO(2j+1)xSO(2j+1)", "diag SO(2j+1)", "j", "2j^2+j", "B",
     "group"},
    {Family::D, "D_j", 3, false, "SO(2j,C)", "SO(2j)xSO(2j)", "diag SO(2j)", "j", "2j^2-j", "D", "group"},
    {Family::C, "C_j", 4, false, "Sp(j,C)", "Sp(j)xSp(j)", "diag Sp(j)", "j", "2j^2+j", "C", "group"},
    {Family::AIII, "AIII", 5, true, "SU(p,q)", "SU(p+q)", "S(U(p)xU(q))", "min(p,q)", "2pq",
     "C if p=q, B (nonreduced) otherwise", "symmetric"},
    {Family::AI, "AI", 6, false, "SL(j,R)", "SU(j)", "SO(j)", "j-1", "(j-1)(j+2)/2", "A", "symmetric"},
    {Family::AII, "AII", 7, false, "SU*(2j)", "SU(2j)", "Sp(j)", "j-1", "2j^2-j-1", "A", "symmetric"},
    {Family::BDI, "BDI", 8, true, "SO_o(p,q)", "SO(p+q)", "SO(p)xSO(q)", "min(p,q)", "pq", "D if p=q, B otherwise",
     "symmetric"},
    {Family::DIII, "DIII", 9, false, "SO*(2j)", "SO(2j)", "U(j)", "[j/2]", "j(j-1)",
     "C if j even, B (nonreduced) if j odd", "symmetric"},
    {Family::CII, "CII", 10, true, "Sp(p,q)", "Sp(p+q)", "Sp(p)xSp(q)", "min(p,q)", "4pq",
     "C if p=q, B (nonreduced) otherwise", "symmetric"},
    {Family::CI, "CI", 11, false, "Sp(j,R)", "Sp(j)", "U(j)", "j", "j(j+1)", "C", "symmetric"},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw std::invalid_argument("unknown family");
}

const char* kLimits[] = {
    "(SU(inf) x SU(inf))/diag SU(inf)",
    "(Spin(inf) x Spin(inf))/diag Spin(inf)",
    "(Sp(inf) x Sp(inf))/diag Sp(inf)",
    "SU(p+inf)/S(U(p) x U(inf))",
    "SU(2inf)/S(U(inf) x U(inf))",
    "SU(inf)/SO(inf)",
    "SU(2inf)/Sp(inf)",
    "SO(p+inf)/SO(p) x SO(inf)",
    "SO(2inf)/SO(inf) x SO(inf)",
    "SO(2inf)/U(inf)",
    "Sp(p+inf)/Sp(p) x Sp(inf)",
    "Sp(2inf)/Sp(inf) x Sp(inf)",
    "Sp(inf)/U(inf)",
};

}  // namespace

std::string family_name(Family f) {
  std::string label = info(f).label;
  return label.substr(0, label.find('_'));
}

Family parse_family(const std::string& s) {
  std::string up;
  for (char c : s) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up.size() > 2 && up.substr(up.size() - 2) == "_J") up = up.substr(0, up.size() - 2);
  for (const auto& fi : kFamilies)
    if (family_name(fi.family) == up) return fi.family;
  throw std::invalid_argument("unknown symmetric space family '" + s + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& fi : kFamilies) v.push_back(fi.family);
    return v;
  }();
  return fams;
}

CatalogEntry catalog_lookup(Family f, int p, int q) {
  const FamilyInfo& fi = info(f);
  CatalogEntry e;
  e.family = f;
  e.rule = fi.rule;
  e.space = std::string(fi.g_compact) + "/" + fi.k;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument(family_name(f) + ": " + why);
  };
  if (fi.two_params) {
    if (p < 1 || q < 1) throw bad("p and q must be positive");
    e.p = p;
    e.q = q;
    int r = std::min(p, q);
    e.rank = r;
    e.nonreduced = p != q && f != Family::BDI;
    switch (f) {
      case Family::AIII:
        e.dim = 2L * p * q;
        e.sigma_half_type = p == q ? ClassicalType::C : ClassicalType::B;
        break;
      case Family::BDI:
        if (p + q < 3) throw bad("p + q must be at least 3");
        e.dim = static_cast<long>(p) * q;
        e.sigma_half_type = p == q ? ClassicalType::D : ClassicalType::B;
        break;
      case Family::CII:
        e.dim = 4L * p * q;
        e.sigma_half_type = p == q ? ClassicalType::C : ClassicalType::B;
        break;
      default: break;
    }
  } else {
    int j = p;
    e.j = j;
    auto need = [&](int lo) {
      if (j < lo) throw bad("j must be at least " + std::to_string(lo));
    };
    switch (f) {
      case Family::A:
        need(2);
        e.rank = j - 1;
        e.dim = static_cast<long>(j) * j - 1;
        e.sigma_half_type = ClassicalType::A;
        break;
      case Family::B:
        need(1);
        e.rank = j;
        e.dim = 2L * j * j + j;
        e.sigma_half_type = ClassicalType::B;
        break;
      case Family::D:
        need(2);
        e.rank = j;
        e.dim = 2L * j * j - j;
        e.sigma_half_type = ClassicalType::D;
        break;
      case Family::C:
        need(1);
        e.rank = j;
        e.dim = 2L * j * j + j;
        e.sigma_half_type = ClassicalType::C;
        break;
      case Family::AI:
        need(2);
        e.rank = j - 1;
        e.dim = static_cast<long>(j - 1) * (j + 2) / 2;
        e.sigma_half_type = ClassicalType::A;
        break;
      case Family::AII:
        need(2);
        e.rank = j - 1;
        e.dim = 2L * j * j - j - 1;
        e.sigma_half_type = ClassicalType::A;
        break;
      case Family::DIII:
        need(2);
        e.rank = j / 2;
        e.dim = static_cast<long>(j) * (j - 1);
        e.nonreduced = j % 2 == 1;
        e.sigma_half_type = e.nonreduced ? ClassicalType::B : ClassicalType::C;
        break;
      case Family::CI:
        need(1);
        e.rank = j;
        e.dim = static_cast<long>(j) * (j + 1);
        e.sigma_half_type = ClassicalType::C;
        break;
      default: break;
    }
  }
  e.sigma_two_type = e.nonreduced ? ClassicalType::C : e.sigma_half_type;
  return e;
}

nlohmann::json to_json(const CatalogEntry& e) {
  const FamilyInfo& fi = info(e.family);
  nlohmann::json j;
  j["family"] = family_name(e.family);
  j["row"] = fi.row;
  j["label"] = fi.label;
  if (fi.two_params) {
    j["p"] = e.p;
    j["q"] = e.q;
  } else {
    j["j"] = e.j;
  }
  j["space"] = e.space;
  j["G_noncompact"] = fi.g_noncompact;
  j["G_compact"] = fi.g_compact;
  j["K"] = fi.k;
  j["rank"] = e.rank;
  j["dim"] = e.dim;
  j["nonreduced"] = e.nonreduced;
  j["sigma_half_type"] = type_name(e.sigma_half_type);
  j["sigma_two_type"] = type_name(e.sigma_two_type);
  j["rule"] = e.rule;
  return j;
}

nlohmann::json catalog_resource() {
  nlohmann::json j;
  j["schema"] = "weyl-restrict-catalog/1";
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& fi : kFamilies)
    rows.push_back({{"row", fi.row},
                    {"family", family_name(fi.family)},
                    {"label", fi.label},
                    {"parameters", fi.two_params ? nlohmann::json{"p", "q"} : nlohmann::json{"j"}},
                    {"G_noncompact", fi.g_noncompact},
                    {"G_compact", fi.g_compact},
                    {"K", fi.k},
                    {"rank", fi.rank_formula},
                    {"dim", fi.dim_formula},
                    {"sigma_half_type", fi.sigma_half_rule},
                    {"rule", fi.rule}});
  j["families"] = rows;
  j["nonreduced_cases"] = {"AIII with p != q", "CII with p != q", "DIII with j odd"};
  j["limits"] = nlohmann::json(std::vector<std::string>(std::begin(kLimits), std::end(kLimits)));
  return j;
}

// ---------------------------------------------------------------------------
// Sigma_{1/2}, Sigma_2

std::vector<CoordVector> sigma_half(const std::vector<CoordVector>& roots) {
  std::set<CoordVector> all(roots.begin(), roots.end());
  std::vector<CoordVector> out;
  for (const auto& a : all)
    if (!all.count(a * rat(1, 2))) out.push_back(a);
  return out;
}

std::vector<CoordVector> sigma_two(const std::vector<CoordVector>& roots) {
  std::set<CoordVector> all(roots.begin(), roots.end());
  std::vector<CoordVector> out;
  for (const auto& a : all)
    if (!all.count(a * 2)) out.push_back(a);
  return out;
}

std::vector<CoordVector> bc_roots(int rank) {
  std::vector<CoordVector> out;
  for (int i = 0; i < rank; ++i) {
    for (long s : {1L, 2L}) {
      out.push_back(CoordVector::unit(rank, i, s));
      out.push_back(CoordVector::unit(rank, i, -s));
    }
    for (int j = 0; j < i; ++j)
      for (long a : {1L, -1L})
        for (long b : {1L, -1L}) out.push_back(CoordVector::unit(rank, i, a) + CoordVector::unit(rank, j, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RootSystem> classify(const std::vector<CoordVector>& roots) {
  if (roots.empty()) return std::nullopt;
  std::vector<CoordVector> sorted(roots);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int dim = static_cast<int>(sorted[0].size());
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    int rank = t == ClassicalType::A ? dim - 1 : dim;
    if (rank < 1) continue;
    RootSystem rs = build_root_system(t, rank, true);
    if (rs.roots == sorted) return rs;
  }
  return std::nullopt;
}

RootSystem sigma_two_system(const CatalogEntry& e) {
  return build_root_system(e.sigma_two_type, e.rank, true);
}

// ---------------------------------------------------------------------------
// Class-one weights

namespace {

// v_i in the span of the simple roots with <v_i, alpha_j> = delta_ij c_j.
std::vector<CoordVector> dual_basis(const RootSystem& rs, bool halve) {
  const std::size_t r = rs.simple_roots.size();
  if (r == 0) return {};
  RationalMatrix ginv = rs.gram().inverse();
  std::vector<CoordVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    Rational c = dot(rs.simple_roots[i], rs.simple_roots[i]);
    if (halve) c /= 2;
    CoordVector v(rs.ambient_dim);
    for (std::size_t m = 0; m < r; ++m) v += rs.simple_roots[m] * (c * ginv(i, m));
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<CoordVector> class_one_weights(const RootSystem& rs) { return dual_basis(rs, false); }

std::vector<CoordVector> fundamental_weights(const RootSystem& rs) { return dual_basis(rs, true); }

CoordVector class_one_weight(const RootSystem& rs, const std::vector<long>& I) {
  auto xi = class_one_weights(rs);
  if (I.size() > xi.size()) throw DimensionError("I-vector longer than the rank");
  CoordVector mu(rs.ambient_dim);
  for (std::size_t j = 0; j < I.size(); ++j) mu += xi[j] * Rational(I[j]);
  return mu;
}

std::optional<std::vector<long>> class_one_coordinates(const RootSystem& rs, const CoordVector& mu) {
  auto xi = class_one_weights(rs);
  std::vector<long> out;
  CoordVector back(rs.ambient_dim);
  for (std::size_t j = 0; j < rs.simple_roots.size(); ++j) {
    const auto& a = rs.simple_roots[j];
    Rational c = dot(mu, a) / dot(a, a);
    if (!is_integer(c) || c < 0) return std::nullopt;
    out.push_back(to_long(c));
    back += xi[j] * c;
  }
  if (back != mu) return std::nullopt;
  return out;
}

CoordVector rho_with_multiplicities(const RootSystem& rs, const std::map<CoordVector, long>& mult) {
  CoordVector sum(rs.ambient_dim);
  for (const auto& a : rs.positive_roots) {
    auto it = mult.find(a);
    if (it != mult.end() && it->second < 0) throw std::invalid_argument("negative root multiplicity");
    sum += a * Rational(it == mult.end() ? 1 : it->second);
  }
  return sum * rat(1, 2);
}

XiReport check_xi_restriction(const PropagationPair& pair) {
  XiReport rep;
  rep.type = pair.type();
  rep.n = pair.n;
  rep.k = pair.k;
  auto xs = class_one_weights(pair.small), xl = class_one_weights(pair.large);

  auto solves = [&](const RootSystem& rs, const std::vector<CoordVector>& xi) {
    for (std::size_t i = 0; i < xi.size(); ++i)
      for (std::size_t j = 0; j < rs.simple_roots.size(); ++j) {
        const auto& a = rs.simple_roots[j];
        if (dot(xi[i], a) / dot(a, a) != (i == j ? 1 : 0)) return false;
      }
    return true;
  };
  auto integral = [&](const RootSystem& rs, const std::vector<CoordVector>& xi) {
    for (const auto& x : xi)
      for (const auto& a : rs.positive_roots) {
        Rational c = dot(x, a) / dot(a, a);
        if (!is_integer(c) || c < 0) return false;
      }
    return true;
  };
  rep.solves = solves(pair.small, xs) && solves(pair.large, xl);
  if (!rep.solves) rep.failures.push_back("defining relations");
  rep.integral = integral(pair.small, xs) && integral(pair.large, xl);
  if (!rep.integral) rep.failures.push_back("integrality");

  rep.restricts = true;
  rep.unique = true;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (pair.restrict_weight(xl[j]) != xs[j]) {
      rep.restricts = false;
      rep.failures.push_back("xi_" + std::to_string(j + 1) + " restriction");
    }
    int count = 0;
    for (const auto& x : xl) count += pair.restrict_weight(x) == xs[j];
    if (count != 1) {
      rep.unique = false;
      rep.failures.push_back("xi_" + std::to_string(j + 1) + " uniqueness");
    }
  }
  rep.pass = rep.solves && rep.integral && rep.restricts && rep.unique;
  return rep;
}

nlohmann::json to_json(const XiReport& r) {
  return {{"type", type_name(r.type)}, {"n", r.n},           {"k", r.k},
          {"solves", r.solves},        {"integral", r.integral}, {"restricts", r.restricts},
          {"unique", r.unique},        {"pass", r.pass},     {"failures", r.failures}};
}

}  // namespace wr
