#include "weylrestrict/poly.hpp"

#include <sstream>

#include "weylrestrict/errors.hpp"

namespace wr {

namespace {

void accumulate(Poly::TermMap& m, const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c, bool laurent) {
  Poly p(nvars, laurent);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i, bool laurent) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, 1, laurent);
}

Poly Poly::monomial(const Exponent& e, const Rational& c, bool laurent) {
  Poly p(e.size(), laurent);
  p.add_term(e, c);
  return p;
}

Poly Poly::linear(const CoordVector& v, const Rational& c) {
  Poly p = constant(v.size(), c);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Exponent e(v.size(), 0);
    e[i] = 1;
    p.add_term(e, v[i]);
  }
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionError("exponent vector has wrong length");
  if (!laurent_)
    for (int x : e)
      if (x < 0) throw DimensionError("negative exponent in an ordinary polynomial");
  accumulate(terms_, e, c);
}

const Poly::TermMap::value_type& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Exponent Poly::min_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

void Poly::require_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials over different variable counts");
  if (laurent_ != o.laurent_) throw DimensionError("mixing Laurent and ordinary polynomials");
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  require_compatible(o);
  Poly r(nvars_, laurent_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      accumulate(r.terms_, e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(*this);
  r *= c;
  return r;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1, laurent_);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::mul_monomial(const Exponent& m, const Rational& c) const {
  if (m.size() != nvars_) throw DimensionError("monomial has wrong variable count");
  Poly r(nvars_, laurent_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) {
    Exponent f(e);
    for (std::size_t i = 0; i < nvars_; ++i) {
      f[i] += m[i];
      if (!laurent_ && f[i] < 0) throw DimensionError("negative exponent in an ordinary polynomial");
    }
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), x * c);
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && laurent_ == o.laurent_ && terms_ == o.terms_;
}

Poly Poly::as_laurent() const {
  Poly r(*this);
  r.laurent_ = true;
  return r;
}

Poly Poly::as_ordinary() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) throw PoleError("Laurent polynomial has a negative exponent");
  Poly r(*this);
  r.laurent_ = false;
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      os << to_short_string(c);
    } else {
      os << (c < 0 ? " - " : " + ") << to_short_string(abs(c));
    }
    first = false;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (any ? " " : " * ") << "x" << i + 1 << "^" << e[i];
      any = true;
    }
  }
  return os.str();
}

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars()) throw DimensionError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) throw PoleError("negative power of zero at evaluation point");
      Rational b = e[i] > 0 ? point[i] : 1 / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) t *= b;
    }
    total += t;
  }
  return total;
}

Rational evaluate(const Poly& p, const CoordVector& point) { return evaluate(p, point.data()); }

Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& values, std::size_t target_nvars) {
  for (const auto& [i, v] : values) {
    if (i >= p.nvars()) throw DimensionError("substitution for a variable that does not exist");
    if (v.nvars() != target_nvars) throw DimensionError("substituted value has wrong variable count");
    if (v.laurent()) throw DimensionError("substituted values must be ordinary polynomials");
  }
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (!values.count(i) && i >= target_nvars && p.degree_in(i) != 0)
      throw DimensionError("unassigned variable falls outside the target variable set");

  // Cache powers of every substituted value.
  std::map<std::size_t, std::vector<Poly>> powers;
  for (const auto& [i, v] : values) powers[i].push_back(Poly::constant(target_nvars, 1));

  auto power_of = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values.at(i));
    return cache[e];
  };

  Poly result(target_nvars, p.laurent());
  for (const auto& [e, c] : p.terms()) {
    Exponent pass(target_nvars, 0);
    Poly term = Poly::constant(target_nvars, c, p.laurent());
    bool zero = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto vit = values.find(i);
      if (vit == values.end()) {
        pass[i] = e[i];
        continue;
      }
      const Poly& v = vit->second;
      if (e[i] > 0) {
        const Poly& pw = power_of(i, e[i]);
        if (pw.is_zero()) {
          zero = true;
          break;
        }
        term = p.laurent() ? term * pw.as_laurent() : term * pw;
      } else {
        if (v.size() != 1) throw PoleError("negative exponent substituted by a non-monomial value");
        const auto& [ve, vc] = *v.terms().begin();
        Exponent inv(ve.size());
        for (std::size_t k = 0; k < ve.size(); ++k) inv[k] = ve[k] * e[i];
        Rational ic = 1;
        for (int k = 0; k < -e[i]; ++k) ic /= vc;
        term = term.mul_monomial(inv, ic);
      }
    }
    if (zero) continue;
    result += term.mul_monomial(pass, 1);
  }
  return result;
}

Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& values) {
  return substitute(p, values, p.nvars());
}

namespace {

// Binomial rows, grown on demand.
const std::vector<Rational>& binomial_row(int n) {
  thread_local std::vector<std::vector<Rational>> rows{{1}};
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Rational> next(prev.size() + 1);
    next[0] = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(next));
  }
  return rows[n];
}

}  // namespace

Poly shift(const Poly& p, const CoordVector& c) {
  if (c.size() != p.nvars()) throw DimensionError("shift vector has wrong dimension");
  if (p.laurent()) throw DimensionError("shift is defined for ordinary polynomials only");
  Poly cur = p;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] == 0) continue;
    Poly::TermMap next;
    std::vector<Rational> cpow{1};
    for (const auto& [e, coef] : cur.terms()) {
      int d = e[v];
      if (d == 0) {
        accumulate(next, e, coef);
        continue;
      }
      while (static_cast<int>(cpow.size()) <= d) cpow.push_back(cpow.back() * c[v]);
      const auto& row = binomial_row(d);
      Exponent f(e);
      for (int j = 0; j <= d; ++j) {
        f[v] = j;
        accumulate(next, f, coef * row[j] * cpow[d - j]);
      }
    }
    Poly r(p.nvars());
    for (auto& [e, x] : next) r.add_term(e, x);
    cur = std::move(r);
  }
  return cur;
}

Poly restrict_prefix(const Poly& p, std::size_t m) {
  if (m > p.nvars()) throw DimensionError("restriction to more variables than present");
  Poly r(m, p.laurent());
  for (const auto& [e, c] : p.terms()) {
    bool vanishes = false;
    for (std::size_t i = m; i < e.size(); ++i) {
      if (e[i] < 0) throw PoleError("negative exponent on a variable set to zero");
      if (e[i] > 0) vanishes = true;
    }
    if (vanishes) continue;
    r.add_term(Exponent(e.begin(), e.begin() + static_cast<long>(m)), c);
  }
  return r;
}

Poly extend_vars(const Poly& p, std::size_t m) {
  if (m < p.nvars()) throw DimensionError("extend_vars cannot shrink");
  Poly r(m, p.laurent());
  for (const auto& [e, c] : p.terms()) {
    Exponent f(e);
    f.resize(m, 0);
    r.add_term(f, c);
  }
  return r;
}

Poly truncate_vars(const Poly& p, std::size_t m) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = m; i < e.size(); ++i)
      if (e[i] != 0) throw DimensionError("truncated variable occurs in the polynomial");
  return restrict_prefix(p, m);
}

Poly act_linear(const Poly& p, const SignedPerm& g) {
  if (static_cast<std::size_t>(g.dim()) != p.nvars()) throw DimensionError("group element has wrong dimension");
  // x_j -> e_{s(j)} x_{s(j)}
  Poly r(p.nvars(), p.laurent());
  Exponent f(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int sgn = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
      int s = g.image(static_cast<int>(j));
      f[s] = e[j];
      if (g.sign(s) < 0 && (e[j] & 1)) sgn = -sgn;
    }
    r.add_term(f, sgn > 0 ? c : Rational(-c));
  }
  return r;
}

Poly act_linear(const Poly& p, const RationalMatrix& g) {
  if (g.rows() != p.nvars() || g.cols() != p.nvars()) throw DimensionError("matrix has wrong dimension");
  if (p.laurent()) throw DimensionError("matrix action on Laurent polynomials is not supported");
  RationalMatrix inv = g.inverse();
  std::map<std::size_t, Poly> values;
  for (std::size_t j = 0; j < p.nvars(); ++j) {
    CoordVector row(p.nvars());
    for (std::size_t m = 0; m < p.nvars(); ++m) row[m] = inv(j, m);
    values.emplace(j, Poly::linear(row));
  }
  return substitute(p, values);
}

Poly act_on_exponents(const Poly& p, const SignedPerm& g) {
  if (static_cast<std::size_t>(g.dim()) != p.nvars()) throw DimensionError("group element has wrong dimension");
  Poly r(p.nvars(), true);
  Exponent f(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      int s = g.image(static_cast<int>(j));
      f[s] = g.sign(s) * e[j];
    }
    r.add_term(f, c);
  }
  return p.laurent() ? r : r.as_ordinary();
}

namespace {

Poly divide_ordinary(const Poly& num, const Poly& den) {
  const auto& [ed, cd] = den.leading_term();
  Poly::TermMap rem = num.terms();
  Poly q(num.nvars());
  Exponent diff(num.nvars());
  while (!rem.empty()) {
    auto lt = std::prev(rem.end());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lt->first[i] - ed[i];
      if (diff[i] < 0) throw NotDivisibleError("polynomial is not divisible");
    }
    Rational c = lt->second / cd;
    q.add_term(diff, c);
    Exponent f(diff.size());
    for (const auto& [e, x] : den.terms()) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = e[i] + diff[i];
      accumulate(rem, f, -c * x);
    }
  }
  return q;
}

}  // namespace

Poly exact_divide(const Poly& num, const Poly& den) {
  if (num.nvars() != den.nvars() || num.laurent() != den.laurent())
    throw DimensionError("exact_divide operands are incompatible");
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) return Poly(num.nvars(), num.laurent());
  if (!num.laurent()) return divide_ordinary(num, den);

  // Clear denominators in both, divide as ordinary polynomials, shift back.
  Exponent mn = num.min_exponents(), md = den.min_exponents();
  Exponent neg_mn(mn.size()), neg_md(md.size()), back(mn.size());
  for (std::size_t i = 0; i < mn.size(); ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    back[i] = mn[i] - md[i];
  }
  Poly q = divide_ordinary(num.mul_monomial(neg_mn, 1).as_ordinary(), den.mul_monomial(neg_md, 1).as_ordinary());
  return q.as_laurent().mul_monomial(back, 1);
}

bool divides(const Poly& den, const Poly& num) {
  try {
    exact_divide(num, den);
    return true;
  } catch (const NotDivisibleError&) {
    return false;
  }
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    arr.push_back(nlohmann::json::array({it->first, to_fraction_string(it->second)}));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j, std::size_t nvars, bool laurent) {
  Poly p(nvars, laurent);
  for (const auto& term : j) {
    Exponent e = term.at(0).get<Exponent>();
    p.add_term(e, parse_rational(term.at(1).get<std::string>()));
  }
  return p;
}

Poly parse_poly(const std::string& text, std::size_t nvars, bool laurent) {
  std::istringstream is(text);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  Poly p(nvars, laurent);
  std::size_t i = 0;
  if (tok.size() == 1 && tok[0] == "0") return p;
  int sign = 1;
  while (i < tok.size()) {
    if (tok[i] == "+" || tok[i] == "-") {
      sign = tok[i] == "-" ? -1 : 1;
      ++i;
    }
    if (i >= tok.size()) throw std::invalid_argument("dangling sign in polynomial text");
    Rational c = parse_rational(tok[i++]) * sign;
    Exponent e(nvars, 0);
    if (i < tok.size() && tok[i] == "*") {
      ++i;
      while (i < tok.size() && tok[i].size() > 1 && tok[i][0] == 'x') {
        auto caret = tok[i].find('^');
        if (caret == std::string::npos) throw std::invalid_argument("missing exponent in " + tok[i]);
        std::size_t var = std::stoul(tok[i].substr(1, caret - 1));
        if (var == 0 || var > nvars) throw DimensionError("variable index out of range in " + tok[i]);
        e[var - 1] = std::stoi(tok[i].substr(caret + 1));
        ++i;
      }
    }
    p.add_term(e, c);
    sign = 1;
  }
  return p;
}

}  // namespace wr
