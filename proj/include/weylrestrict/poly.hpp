#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylrestrict/linalg.hpp"
#include "weylrestrict/rational.hpp"
#include "weylrestrict/signed_perm.hpp"

namespace wr {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Laurent polynomials allow negative exponents; mixing the two kinds in one
// operation is a DimensionError.  Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars, bool laurent = false) : nvars_(nvars), laurent_(laurent) {}

  static Poly constant(std::size_t nvars, const Rational& c, bool laurent = false);
  static Poly variable(std::size_t nvars, std::size_t i, bool laurent = false);
  static Poly monomial(const Exponent& e, const Rational& c, bool laurent = false);
  // sum_i v_i x_i + c
  static Poly linear(const CoordVector& v, const Rational& c = 0);

  std::size_t nvars() const { return nvars_; }
  bool laurent() const { return laurent_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  // Largest exponent in lex order.
  const TermMap::value_type& leading_term() const;

  int total_degree() const;                 // -1 for the zero polynomial
  int degree_in(std::size_t var) const;     // max exponent of one variable
  bool is_homogeneous() const;
  Exponent min_exponents() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly pow(unsigned e) const;
  Poly mul_monomial(const Exponent& e, const Rational& c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly as_laurent() const;
  Poly as_ordinary() const;  // PoleError if a negative exponent is present

  // Canonical text: "c * x1^e1 x3^e3 + ...", leading term first.
  std::string str() const;

 private:
  void require_compatible(const Poly& o) const;

  std::size_t nvars_ = 0;
  bool laurent_ = false;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Evaluate at a rational point.  PoleError for a negative power of zero.
Rational evaluate(const Poly& p, const std::vector<Rational>& point);
Rational evaluate(const Poly& p, const CoordVector& point);

// Replace variable i by values[i] when present.  All values are ordinary
// polynomials in the target variable count; unassigned variables map to
// themselves, so the target count must cover them.
Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& values, std::size_t target_nvars);
Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& values);

// p(x + c), Taylor shift one variable at a time.
Poly shift(const Poly& p, const CoordVector& c);

// Set every variable with index >= m to zero and drop it.
Poly restrict_prefix(const Poly& p, std::size_t m);
// Add trailing variables (exponent zero).
Poly extend_vars(const Poly& p, std::size_t m);
// Drop trailing variables; they must not occur.
Poly truncate_vars(const Poly& p, std::size_t m);

// (g.p)(x) = p(g^{-1} x).
Poly act_linear(const Poly& p, const SignedPerm& g);
Poly act_linear(const Poly& p, const RationalMatrix& g);  // SingularMatrixError
// Apply g to exponent vectors, a^mu -> a^{g mu}; used for characters.
Poly act_on_exponents(const Poly& p, const SignedPerm& g);

// Exact quotient num/den or NotDivisibleError.  Works for Laurent inputs.
Poly exact_divide(const Poly& num, const Poly& den);
bool divides(const Poly& den, const Poly& num);

// [[exponents], "num/den"] pairs, leading term first.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, std::size_t nvars, bool laurent = false);

// Parse the text form produced by Poly::str.
Poly parse_poly(const std::string& text, std::size_t nvars, bool laurent = false);

}  // namespace wr
