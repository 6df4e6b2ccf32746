#pragma once

#include <vector>

#include "weylrestrict/rational.hpp"

namespace wr {

// Small dense matrices over Q.  Only what the root-system code needs.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  // Columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<CoordVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  CoordVector operator*(const CoordVector& v) const;
  RationalMatrix transpose() const;
  bool operator==(const RationalMatrix& o) const;
  bool operator<(const RationalMatrix& o) const;

  Rational determinant() const;
  RationalMatrix inverse() const;  // SingularMatrixError
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Solve A x = b for square nonsingular A.
CoordVector solve(const RationalMatrix& a, const CoordVector& b);

}  // namespace wr
