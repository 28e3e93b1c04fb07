#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bifib/poly.hpp"

namespace bifib {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Builds a matrix whose column j is columns[j]; all columns must share a length.
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
/// Throws DimensionError if the matrix is not square.
Rational det_exact(const RationalMatrix& m);

/// Unique solution of m * x = rhs, by fraction-free forward elimination and
/// exact rational back-substitution. Throws DimensionError on shape mismatch
/// and SingularMatrix if m is singular.
std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs);

std::size_t rank_exact(const RationalMatrix& m);

std::string to_string(const RationalMatrix& m);

}  // namespace bifib
