#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bifib/matrix.hpp"
#include "bifib/poly.hpp"
#include "bifib/report.hpp"
#include "bifib/sequences.hpp"

namespace bifib {

enum class BasisFamily { Canonical, BU, BV, BUstar, BVstar };

std::string to_string(BasisFamily family);
std::optional<BasisFamily> parse_basis_family(std::string_view name);

/// Canonical(m) = C_m = (x^{m-2k} y^k)_{k <= m/2}
/// BU(n)     = (x^{n-k} U_{n+k+1})_{0<=k<=n}   in E_{2n}
/// BV(n)     = (x^{n-k} V_{n+k})_{0<=k<=n}     in E_{2n}
/// BUstar(n) = (x^{n-k} U_{n+k})_{0<=k<n}      in E_{2n-1}, n >= 1
/// BVstar(n) = (x^{n-k} V_{n+k-1})_{0<=k<n}    in E_{2n-1}, n >= 1
struct BasisSpec {
  BasisFamily family;
  std::uint32_t n;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

std::string to_string(const BasisSpec& spec);

/// Degree index m of the space E_m the basis lives in.
std::uint32_t ambient_degree(const BasisSpec& spec);
std::size_t basis_size(const BasisSpec& spec);

/// Vector k of the basis together with its symbolic form: multiplier x^{x_power}
/// times W_{index} for W = kind.
struct BasisTerm {
  std::uint32_t x_power;
  SequenceKind kind;
  std::size_t index;
};
std::vector<BasisTerm> basis_terms(const BasisSpec& spec);

/// Throws DomainError for starred families at n = 0.
std::vector<BivarPoly> build_basis(const BasisSpec& spec);

/// Column k = coordinates of basis vector k over C_{ambient}.
/// Throws DomainError for the canonical family.
RationalMatrix coordinate_matrix(const BasisSpec& spec);

/// Determinant by repeating the column operations W_j - W_{j-1}: the top row
/// reduces to its first entry and the remaining minor is the coordinate matrix
/// of the same family at n - 1. Returns nullopt if that structure is not found.
std::optional<Rational> det_telescoping(const BasisSpec& spec);

struct Decomposition {
  BivarPoly target;
  BasisSpec basis;
  std::vector<Rational> coords;
};

/// Exact coordinates of `target` over the basis, by linear solve.
/// Throws MalformedElement if target is not in E_{ambient}.
Decomposition decompose(const BivarPoly& target, const BasisSpec& spec);

/// sum_k coords[k] * basis[k]
BivarPoly recompose(const BasisSpec& spec, const std::vector<Rational>& coords);

/// det(BU) = det(BUstar) = 1 and det(BV) = det(BVstar) = 2 for 1 <= n <= n_max,
/// by Bareiss and by the telescoping reduction.
Report check_lemma1(std::size_t n_max);

/// `{"target": [...], "family": "BV", "n": 3, "coords": ["1", ...]}`
std::string to_json(const Decomposition& d);

/// `V_7 = -2x^4 U_4 + 8x^3 U_5 - ...` with `lhs` as the left-hand side text.
std::string render_identity(const std::string& lhs, const Decomposition& d);

}  // namespace bifib
