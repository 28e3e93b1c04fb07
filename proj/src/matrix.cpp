#include "bifib/matrix.hpp"

#include <sstream>
#include <utility>

#include "bifib/errors.hpp"

namespace bifib {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("columns of unequal length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

namespace {

// Integer working copy of a rational matrix (optionally augmented by one
// column). Each row is multiplied by the lcm of its denominators; the product
// of those multipliers is kept so determinants can be rescaled.
struct IntegerWork {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  Integer row_scale = 1;

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntegerWork to_integer(const RationalMatrix& m, std::span<const Rational> extra_column = {}) {
  IntegerWork w;
  w.rows = m.rows();
  w.cols = m.cols() + (extra_column.empty() ? 0 : 1);
  w.a.resize(w.rows * w.cols);
  for (std::size_t r = 0; r < w.rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    if (!extra_column.empty()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), extra_column[r].get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      w.at(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
    if (!extra_column.empty()) {
      w.at(r, m.cols()) = extra_column[r].get_num() * (lcm / extra_column[r].get_den());
    }
    w.row_scale *= lcm;
  }
  return w;
}

// In-place Bareiss elimination over the first `pivot_cols` columns.
// Returns the pivot rows' column indices (one per rank step) and the row-swap
// parity. After the call, the entry at (step, pivot column) is the leading
// principal minor of that size.
struct EliminationResult {
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
};

EliminationResult bareiss(IntegerWork& w, std::size_t pivot_cols) {
  EliminationResult res;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < w.rows; ++col) {
    std::size_t p = row;
    while (p < w.rows && sgn(w.at(p, col)) == 0) ++p;
    if (p == w.rows) continue;
    if (p != row) {
      for (std::size_t c = 0; c < w.cols; ++c) std::swap(w.at(p, c), w.at(row, c));
      res.odd_swaps = !res.odd_swaps;
    }
    const Integer pivot = w.at(row, col);
    for (std::size_t r = row + 1; r < w.rows; ++r) {
      const Integer factor = w.at(r, col);
      for (std::size_t c = col; c < w.cols; ++c) {
        Integer v = pivot * w.at(r, c) - factor * w.at(row, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        w.at(r, c) = std::move(v);
      }
    }
    // Entries left of the pivot column in lower rows are now zero; rows that
    // were skipped by a zero column keep their (already eliminated) zeros.
    prev = pivot;
    res.pivot_cols.push_back(col);
    ++row;
  }
  return res;
}

}  // namespace

Rational det_exact(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerWork w = to_integer(m);
  const auto res = bareiss(w, n);
  if (res.pivot_cols.size() < n) return 0;
  Rational det(w.at(n - 1, n - 1), w.row_scale);
  det.canonicalize();
  return res.odd_swaps ? Rational(-det) : det;
}

std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (!m.square()) throw DimensionError("solve needs a square matrix");
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  IntegerWork w = to_integer(m, rhs);
  const auto res = bareiss(w, n);
  if (res.pivot_cols.size() < n) throw SingularMatrix("matrix is singular");

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = Rational(w.at(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(w.at(i, j)) * x[j];
    acc /= Rational(w.at(i, i));
    x[i] = acc;
  }
  return x;
}

std::size_t rank_exact(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntegerWork w = to_integer(m);
  return bareiss(w, m.cols()).pivot_cols.size();
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
    out << "]\n";
  }
  return out.str();
}

}  // namespace bifib
