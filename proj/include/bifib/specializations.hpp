#pragma once

#include <string>

#include "bifib/poly.hpp"
#include "bifib/report.hpp"
#include "bifib/sequences.hpp"

namespace bifib {

/// p -> post_scale * p(x_image, y_image)
struct SpecializationRule {
  std::string name;
  BivarPoly x_image;
  BivarPoly y_image;
  Rational post_scale = 1;

  BivarPoly apply(const BivarPoly& p) const { return scale(substitute(p, x_image, y_image), post_scale); }
};

/// "chebyshev-T": (x, y) -> (2x, -1), scaled by 1/2; sends V_n to T_n.
const SpecializationRule& chebyshev_first_kind_rule();
/// "chebyshev-U": (x, y) -> (2x, -1); sends U_{n+1} to the second-kind U_n.
const SpecializationRule& chebyshev_second_kind_rule();
/// "double-x": (x, y) -> (2x, 1), no scaling.
const SpecializationRule& double_x_rule();

/// T_n(x) = V_n(2x, -1) / 2.
BivarPoly chebyshev_T(std::size_t n);
/// U_n(x) = U_{n+1}(2x, -1).
BivarPoly chebyshev_U(std::size_t n);

/// U_n or V_n evaluated at integer (x0, y0).
Integer evaluate_numbers(SequenceKind kind, std::size_t n, const Integer& x0, const Integer& y0);

/// T and U satisfy W_n = 2xW_{n-1} - W_{n-2} with their seeds, and T_n has
/// only exponents of the parity of n, for n <= n_max.
Report check_chebyshev(std::size_t n_max);

/// Every decomposition identity with closed-form coefficients stays exact
/// after applying the double-x and Chebyshev substitutions, n <= n_max.
Report check_theorem_transfer(std::uint32_t n_max);

}  // namespace bifib
