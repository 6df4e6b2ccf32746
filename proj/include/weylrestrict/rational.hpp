#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wr {

// GMP rationals are kept canonical by every arithmetic operation, so the only
// place that needs care is construction from an explicit numerator/denominator.
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational parse_rational(std::string_view text);

// Always "num/den", used by the JSON encoders.
std::string to_fraction_string(const Rational& q);
// "num" for integers, "num/den" otherwise.
std::string to_short_string(const Rational& q);

bool is_integer(const Rational& q);
long to_long(const Rational& q);  // throws std::domain_error unless integral and in range

// Dense vector of rationals in ambient coordinates.  Entry j is the
// coefficient of the basis vector f_{j+1}.
class CoordVector {
 public:
  CoordVector() = default;
  explicit CoordVector(std::size_t n) : c_(n) {}
  CoordVector(std::initializer_list<Rational> init) : c_(init) {}
  explicit CoordVector(std::vector<Rational> v) : c_(std::move(v)) {}
  static CoordVector from_ints(const std::vector<long>& v);
  static CoordVector unit(std::size_t n, std::size_t i, const Rational& scale = 1);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& data() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  CoordVector operator+(const CoordVector& o) const;
  CoordVector operator-(const CoordVector& o) const;
  CoordVector operator-() const;
  CoordVector operator*(const Rational& s) const;
  CoordVector& operator+=(const CoordVector& o);
  CoordVector& operator-=(const CoordVector& o);

  Rational sum() const;
  bool is_zero() const;

  bool operator==(const CoordVector& o) const { return c_ == o.c_; }
  bool operator!=(const CoordVector& o) const { return !(*this == o); }
  bool operator<(const CoordVector& o) const { return c_ < o.c_; }

  std::string str() const;  // "(1, 1/2, 0)"

 private:
  std::vector<Rational> c_;
};

inline CoordVector operator*(const Rational& s, const CoordVector& v) { return v * s; }

// Standard (unscaled) dot product.
Rational dot(const CoordVector& a, const CoordVector& b);

}  // namespace wr
