#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bifib/bases.hpp"
#include "bifib/poly.hpp"
#include "bifib/report.hpp"

namespace bifib {

/// The five integer families giving coordinates of
///   a: 2U_{2n+1} over BV(n)      b: U_{2n} over BUstar(n)
///   c: V_{2n-1} over BUstar(n)   d: 2V_{2n-1} over BVstar(n)
///   e: 2U_{2n} over BVstar(n)
enum class CoeffTag { a, b, c, d, e };

enum class Method { Closed, Recurrence, Oracle };

std::string to_string(CoeffTag tag);
std::string to_string(Method method);
std::optional<CoeffTag> parse_coeff_tag(std::string_view name);
std::optional<Method> parse_method(std::string_view name);

/// First valid row: 0 for a and b, 1 for c, d and e.
std::uint32_t min_row(CoeffTag tag);

/// Number of entries in row n of the printed triangle: n + 1 for a, b, c, d
/// (c and d keep their k = n seeds) and n for e.
std::size_t row_length(CoeffTag tag, std::uint32_t n);

/// Number of coordinates in the decomposition at row n: n + 1 for a, n otherwise.
std::size_t decomposition_length(CoeffTag tag, std::uint32_t n);

/// Basis and target of the decomposition the family describes.
BasisSpec target_basis(CoeffTag tag, std::uint32_t n);
BivarPoly target_poly(CoeffTag tag, std::uint32_t n);
/// Printable left-hand side, e.g. "2U_7".
std::string target_label(CoeffTag tag, std::uint32_t n);

// Closed forms. Each throws IndexError outside 0 <= k <= n (and n >= 1 for c, d, e).
Integer a_closed(long n, long k);
Integer b_closed(long n, long k);
Integer c_closed(long n, long k);
/// Throws IntegralityViolation if (n + k) C(n, k) / n is not an integer.
Integer d_closed(long n, long k);
/// Throws IntegralityViolation if a_{n-1,k} + d_{n,k} is odd.
Integer e_closed(long n, long k);
Integer closed_value(CoeffTag tag, long n, long k);

/// Rows of one family produced by one method.
struct CoeffTriangle {
  CoeffTag family = CoeffTag::a;
  Method method = Method::Closed;
  std::uint32_t first_row = 0;
  std::vector<std::vector<Integer>> rows;

  std::uint32_t last_row() const { return first_row + static_cast<std::uint32_t>(rows.size()) - 1; }
  const std::vector<Integer>& row(std::uint32_t n) const { return rows.at(n - first_row); }
};

CoeffTriangle closed_triangle(CoeffTag tag, std::uint32_t n_max);
CoeffTriangle recurrence_triangle(CoeffTag tag, std::uint32_t n_max);
/// Rows from decompose() on the family's target; each row covers only the
/// decomposition range. Throws IntegralityViolation on a non-integer coordinate.
CoeffTriangle oracle_triangle(CoeffTag tag, std::uint32_t n_max);
CoeffTriangle make_triangle(CoeffTag tag, std::uint32_t n_max, Method method);

CoeffTriangle a_recur_triangle(std::uint32_t n_max);
CoeffTriangle b_recur_triangle(std::uint32_t n_max);
CoeffTriangle c_recur_triangle(std::uint32_t n_max);
CoeffTriangle d_recur_triangle(std::uint32_t n_max);
CoeffTriangle e_recur_triangle(std::uint32_t n_max);

/// Closed form against recurrence on every row entry and, when `with_oracle`,
/// against the decompose() coordinates on the decomposition range.
Report cross_check(CoeffTag tag, std::uint32_t n_max, bool with_oracle = true);

/// The five decompositions as exact polynomial identities with closed-form
/// coefficients, n <= n_max (a from n = 0, the others from n = 1).
Report check_theorems(std::uint32_t n_max);

}  // namespace bifib
