#include "weylrestrict/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weylrestrict/errors.hpp"

namespace wr {

std::string type_name(ClassicalType t) {
  switch (t) {
    case ClassicalType::A: return "A";
    case ClassicalType::B: return "B";
    case ClassicalType::C: return "C";
    case ClassicalType::D: return "D";
  }
  return "?";
}

ClassicalType parse_type(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return ClassicalType::A;
      case 'B': return ClassicalType::B;
      case 'C': return ClassicalType::C;
      case 'D': return ClassicalType::D;
    }
  }
  throw std::invalid_argument("unknown classical type '" + s + "'");
}

int min_rank(ClassicalType t) {
  switch (t) {
    case ClassicalType::A: return 1;
    case ClassicalType::B: return 2;
    case ClassicalType::C: return 3;
    case ClassicalType::D: return 4;
  }
  return 1;
}

namespace {

CoordVector e(int n, int i, long s = 1) { return CoordVector::unit(n, i, s); }

}  // namespace

RootSystem build_root_system(ClassicalType t, int rank, bool permissive) {
  if (rank < 1) throw RankError("rank must be positive");
  if (rank > 12) throw RankError("rank above 12 is not supported");
  RootSystem rs;
  rs.type = t;
  rs.rank = rank;
  rs.permissive = permissive;
  if (rank < min_rank(t)) {
    if (!permissive)
      throw RankError(type_name(t) + std::to_string(rank) + " is below the minimum rank " +
                      std::to_string(min_rank(t)));
    rs.note = "permissive rank " + type_name(t) + std::to_string(rank) + " accepted below minimum " +
              std::to_string(min_rank(t));
  }
  const int n = rank;
  const int N = t == ClassicalType::A ? n + 1 : n;
  rs.ambient_dim = N;

  // Positive roots: f_i - f_j (i > j) always, plus type-specific ones.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j) {
      rs.positive_roots.push_back(e(N, i) - e(N, j));
      if (t != ClassicalType::A) rs.positive_roots.push_back(e(N, i) + e(N, j));
    }
  for (int i = 0; i < N; ++i) {
    if (t == ClassicalType::B) rs.positive_roots.push_back(e(N, i));
    if (t == ClassicalType::C) rs.positive_roots.push_back(e(N, i, 2));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  for (const auto& a : rs.positive_roots) {
    rs.roots.push_back(a);
    rs.roots.push_back(-a);
  }
  std::sort(rs.roots.begin(), rs.roots.end());

  switch (t) {
    case ClassicalType::A:
      for (int j = 1; j <= n; ++j) rs.simple_roots.push_back(e(N, j) - e(N, j - 1));
      break;
    case ClassicalType::B:
    case ClassicalType::C:
    case ClassicalType::D:
      if (t == ClassicalType::B) rs.simple_roots.push_back(e(N, 0));
      if (t == ClassicalType::C) rs.simple_roots.push_back(e(N, 0, 2));
      if (t == ClassicalType::D) {
        // D1 has no roots at all; keep it usable as a torus.
        if (n >= 2) rs.simple_roots.push_back(e(N, 0) + e(N, 1));
      }
      for (int j = 1; j < n; ++j) rs.simple_roots.push_back(e(N, j) - e(N, j - 1));
      break;
  }
  if (t == ClassicalType::D && n == 1) rs.note += "; D1 has no roots";

  rs.rho = CoordVector(N);
  for (const auto& a : rs.positive_roots) rs.rho += a;
  rs.rho = rs.rho * rat(1, 2);
  rs.metric_scale = t == ClassicalType::A ? 1 : 2;
  return rs;
}

bool RootSystem::is_root(const CoordVector& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

RationalMatrix RootSystem::gram() const {
  std::size_t r = simple_roots.size();
  RationalMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(i, j) = dot(simple_roots[i], simple_roots[j]);
  return g;
}

std::vector<Rational> RootSystem::simple_coordinates(const CoordVector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim) throw DimensionError("vector has wrong ambient dimension");
  std::size_t r = simple_roots.size();
  CoordVector rhs(r);
  for (std::size_t j = 0; j < r; ++j) rhs[j] = dot(v, simple_roots[j]);
  CoordVector c = r ? solve(gram(), rhs) : CoordVector();
  CoordVector back(ambient_dim);
  for (std::size_t j = 0; j < r; ++j) back += simple_roots[j] * c[j];
  if (back != v) throw std::invalid_argument("vector " + v.str() + " is outside the span of the roots");
  return c.data();
}

CoordVector RootSystem::project(const CoordVector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim) throw DimensionError("vector has wrong ambient dimension");
  if (type != ClassicalType::A) return v;
  Rational mean = v.sum() / ambient_dim;
  CoordVector out(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= mean;
  return out;
}

std::vector<Rational> RootSystem::dynkin_labels(const CoordVector& v) const {
  std::vector<Rational> out;
  for (const auto& a : simple_roots) out.push_back(2 * dot(v, a) / dot(a, a));
  return out;
}

bool RootSystem::is_dominant(const CoordVector& v) const {
  for (const auto& a : simple_roots)
    if (dot(v, a) < 0) return false;
  return true;
}

bool RootSystem::is_integral(const CoordVector& v) const {
  for (const auto& l : dynkin_labels(v))
    if (!wr::is_integer(l)) return false;
  return true;
}

CoordVector highest_root(const RootSystem& rs) {
  if (rs.positive_roots.empty()) throw NotARootError("root system has no roots");
  const CoordVector* best = nullptr;
  Rational best_height = -1;
  for (const auto& a : rs.positive_roots) {
    Rational h = 0;
    for (const auto& c : rs.simple_coordinates(a)) h += c;
    if (h > best_height) {
      best_height = h;
      best = &a;
    }
  }
  return *best;
}

std::vector<long> highest_root_marks(const RootSystem& rs) {
  std::vector<long> marks;
  for (const auto& c : rs.simple_coordinates(highest_root(rs))) marks.push_back(to_long(c));
  return marks;
}

std::string SqrtValue::str() const {
  if (radicand == 1) return to_short_string(coefficient);
  return to_short_string(coefficient) + "*sqrt(" + std::to_string(radicand) + ")";
}

SqrtValue exact_sqrt(const Rational& square) {
  if (square < 0) throw std::domain_error("square root of a negative number");
  SqrtValue out;
  if (square == 0) {
    out.coefficient = 0;
    return out;
  }
  // sqrt(p/q) = sqrt(p q) / q
  mpz_class pq = square.get_num() * square.get_den();
  mpz_class outside = 1, inside = 1;
  mpz_class rest = pq;
  for (mpz_class f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
    if (rest % f == 0) {
      rest /= f;
      inside *= f;
    }
  }
  inside *= rest;
  if (!inside.fits_slong_p()) throw std::overflow_error("radicand too large");
  out.radicand = inside.get_si();
  out.coefficient = Rational(outside, square.get_den());
  out.coefficient.canonicalize();
  return out;
}

std::vector<Rational> coroot_squared_lengths(const RootSystem& rs) {
  std::vector<Rational> out;
  for (const auto& a : rs.simple_roots) {
    CoordVector t = a * (Rational(2) / dot(a, a));
    out.push_back(rs.metric_scale * dot(t, t));
  }
  return out;
}

std::vector<SqrtValue> coroot_lengths(const RootSystem& rs) {
  std::vector<SqrtValue> out;
  for (const auto& q : coroot_squared_lengths(rs)) out.push_back(exact_sqrt(q));
  return out;
}

nlohmann::json to_json(const CoordVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(to_fraction_string(x));
  return arr;
}

CoordVector coords_from_json(const nlohmann::json& j) {
  CoordVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_rational(j[i].get<std::string>());
  return v;
}

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = type_name(rs.type);
  j["rank"] = rs.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["permissive"] = rs.permissive;
  j["metric_scale"] = to_fraction_string(rs.metric_scale);
  auto list = [](const std::vector<CoordVector>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  j["simple_roots"] = list(rs.simple_roots);
  j["positive_roots"] = list(rs.positive_roots);
  j["roots"] = list(rs.roots);
  j["root_count"] = rs.roots.size();
  j["rho"] = to_json(rs.rho);
  if (!rs.positive_roots.empty()) j["highest_root_marks"] = highest_root_marks(rs);
  nlohmann::json lens = nlohmann::json::array();
  for (const auto& l : coroot_lengths(rs)) lens.push_back(l.str());
  j["coroot_lengths"] = lens;
  if (!rs.note.empty()) j["note"] = rs.note;
  return j;
}

}  // namespace wr
