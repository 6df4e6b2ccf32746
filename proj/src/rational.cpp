#include "weylrestrict/rational.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace wr {

Rational rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("rational " + to_short_string(q) + " is not a machine integer");
  return q.get_num().get_si();
}

CoordVector CoordVector::from_ints(const std::vector<long>& v) {
  CoordVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.c_[i] = v[i];
  return out;
}

CoordVector CoordVector::unit(std::size_t n, std::size_t i, const Rational& scale) {
  CoordVector out(n);
  out.c_.at(i) = scale;
  return out;
}

static void require_same(const CoordVector& a, const CoordVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coordinate vectors of different dimension");
}

CoordVector CoordVector::operator+(const CoordVector& o) const {
  CoordVector r(*this);
  r += o;
  return r;
}

CoordVector CoordVector::operator-(const CoordVector& o) const {
  CoordVector r(*this);
  r -= o;
  return r;
}

CoordVector CoordVector::operator-() const {
  CoordVector r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CoordVector CoordVector::operator*(const Rational& s) const {
  CoordVector r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

CoordVector& CoordVector::operator+=(const CoordVector& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Rational CoordVector::sum() const {
  Rational s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

bool CoordVector::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string CoordVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << to_short_string(c_[i]);
  }
  os << ")";
  return os.str();
}

Rational dot(const CoordVector& a, const CoordVector& b) {
  require_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace wr
