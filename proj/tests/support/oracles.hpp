#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the bifib arithmetic it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bifib/poly.hpp"

namespace oracle {

/// Dense-key polynomial: (xExp, yExp) -> integer coefficient, zeros removed.
using IntPoly = std::map<std::pair<unsigned, unsigned>, mpz_class>;

inline void prune(IntPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
}

/// W_n from seeds by W_n = x W_{n-1} + y W_{n-2}, written out term by term.
inline std::vector<IntPoly> recurrence_sequence(IntPoly w0, IntPoly w1, unsigned n_max) {
  std::vector<IntPoly> w{std::move(w0), std::move(w1)};
  for (unsigned n = 2; n <= n_max; ++n) {
    IntPoly next;
    for (const auto& [e, c] : w[n - 1]) next[{e.first + 1, e.second}] += c;
    for (const auto& [e, c] : w[n - 2]) next[{e.first, e.second + 1}] += c;
    prune(next);
    w.push_back(std::move(next));
  }
  w.resize(n_max + 1);
  return w;
}

inline std::vector<IntPoly> fibonacci_polys(unsigned n_max) {
  return recurrence_sequence({}, {{{0, 0}, 1}}, std::max(n_max, 1u));
}

inline std::vector<IntPoly> lucas_polys(unsigned n_max) {
  return recurrence_sequence({{{0, 0}, 2}}, {{{1, 0}, 1}}, std::max(n_max, 1u));
}

/// Converts a kernel polynomial for comparison; fails (returns nullopt-like
/// empty flag) if any coefficient is not an integer.
inline bool to_int_poly(const bifib::BivarPoly& p, IntPoly& out) {
  out.clear();
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) return false;
    out[{m.x_exp, m.y_exp}] = c.get_num();
  }
  return true;
}

/// Pascal's triangle rows 0..n_max.
inline std::vector<std::vector<mpz_class>> pascal(unsigned n_max) {
  std::vector<std::vector<mpz_class>> rows{{1}};
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<mpz_class> row(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// W_n = p W_{n-1} + q W_{n-2} over the integers.
inline std::vector<mpz_class> integer_sequence(long w0, long w1, long p, long q, unsigned n_max) {
  std::vector<mpz_class> w{w0, w1};
  for (unsigned n = 2; n <= n_max; ++n) w.push_back(p * w[n - 1] + q * w[n - 2]);
  w.resize(n_max + 1);
  return w;
}

/// Univariate Chebyshev polynomials by W_n = 2x W_{n-1} - W_{n-2}; index i holds the x^i coefficient.
inline std::vector<std::vector<mpz_class>> chebyshev(std::vector<mpz_class> w0, std::vector<mpz_class> w1,
                                                     unsigned n_max) {
  std::vector<std::vector<mpz_class>> w{std::move(w0), std::move(w1)};
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<mpz_class> next(n + 1, 0);
    for (std::size_t i = 0; i < w[n - 1].size(); ++i) next[i + 1] += 2 * w[n - 1][i];
    for (std::size_t i = 0; i < w[n - 2].size(); ++i) next[i] -= w[n - 2][i];
    w.push_back(std::move(next));
  }
  return w;
}

/// Leibniz-formula determinant; only for small matrices.
inline mpq_class leibniz_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  mpq_class det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpq_class term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Random polynomial with integer coefficients in [-9, 9] and exponents <= max_exp.
inline bifib::BivarPoly random_poly(std::mt19937_64& rng, unsigned max_terms = 5, unsigned max_exp = 6) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<unsigned> count(0, max_terms);
  bifib::BivarPoly p;
  const unsigned terms = count(rng);
  for (unsigned i = 0; i < terms; ++i) p += bifib::BivarPoly::monomial(exp(rng), exp(rng), coeff(rng));
  return p;
}

}  // namespace oracle
