#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bifib/poly.hpp"
#include "bifib/report.hpp"
#include "bifib/sequences.hpp"

namespace bifib {

/// Finite sum p_k E^k of powers of the forward shift E with polynomial
/// coefficients, (E W)_n = W_{n+1}. Zero coefficients are never stored.
class OperatorPoly {
 public:
  using CoeffMap = std::map<std::uint32_t, BivarPoly>;

  OperatorPoly() = default;

  static OperatorPoly identity() { return scalar(1); }
  static OperatorPoly scalar(const BivarPoly& c);
  /// c E^k
  static OperatorPoly shift(std::uint32_t k = 1, const BivarPoly& c = 1);

  const CoeffMap& coeffs() const { return coeffs_; }
  BivarPoly coefficient(std::uint32_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest power of E present, or nullopt for the zero operator.
  std::optional<std::uint32_t> max_shift() const;

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly operator-() const;

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void add_coeff(std::uint32_t k, const BivarPoly& c);

  CoeffMap coeffs_;
};

OperatorPoly op_add(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly op_pow(const OperatorPoly& a, unsigned e);
OperatorPoly op_scale(const OperatorPoly& a, const Rational& c);

/// sum_k p_k W_{n+k} for the sequence held by `seq`.
BivarPoly apply(const OperatorPoly& op, SequenceCache& seq, std::size_t n);

enum class OperatorTag { A, B, C, D, E };

struct OperatorFamily {
  OperatorTag tag;
  std::uint32_t m;
};

std::string to_string(OperatorTag tag);
/// A and B start at m = 0; C, D and E at m = 1.
std::uint32_t min_order(OperatorTag tag);

/// Fully expanded family member:
///   A_m = (x-E)^m + 2 sum_{k=1..m} E^k (x-E)^{m-k}
///   B_m = -(E-x)^m
///   C_m = 2E^m + 2B_m - xE^{m-1}
///   D_m = (E-x)^{m-1} (x-2E)
///   E_m = (x A_{m-1} + D_m)/2 + E^m
/// Throws DomainError below the family's minimum order.
OperatorPoly build_family(OperatorFamily family);

/// Reads op as sum_k r_k x^{m-k} E^k for k = 0..m and returns (r_0..r_m).
/// Throws MalformedElement if some coefficient is not a multiple of x^{m-k}
/// or op has a shift power above m.
std::vector<Rational> family_row(const OperatorPoly& op, std::uint32_t m);

/// `(x^2)·E^0 + (-2x)·E^1 + (1)·E^2`, ascending shift unless `descending`.
std::string to_string(const OperatorPoly& op, bool descending = false);

/// Relations, each applied at the stated base index:
///   a. A_n V at n     = 2U_{2n+1}   (n >= 0)
///   b. B_n U at n     = 0           (n >= 0)
///   c. C_n U at n     = V_{2n-1}    (n >= 1)
///   d. D_n V at n-1   = 0           (n >= 1)
///   e. E_n V at n-1   = 2U_{2n}     (n >= 1)
Report check_relations(std::size_t n_max);

/// (x-E)^k W at n = (-y)^k W_{n-k} for U and V, all 0 <= k <= n <= n_max.
Report check_shift_law(std::size_t n_max);

}  // namespace bifib
