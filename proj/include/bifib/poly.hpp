#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bifib {

using Integer = mpz_class;
using Rational = mpq_class;

/// x^xExp y^yExp. Ordered by total degree, then by the exponent of x.
struct Monomial {
  std::uint32_t x_exp = 0;
  std::uint32_t y_exp = 0;

  constexpr std::uint32_t degree() const { return x_exp + y_exp; }
  /// x counts 1 and y counts 2; x^{n-2k} y^k has weight n.
  constexpr std::uint32_t weight() const { return x_exp + 2 * y_exp; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.x_exp <=> b.x_exp;
  }
};

/// Common weight (xExp + 2 yExp) of all terms, if there is one.
struct HomogeneityProfile {
  std::optional<std::uint32_t> weight;

  bool homogeneous() const { return weight.has_value(); }
};

/// Sparse polynomial in x and y with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so structural equality of
/// the maps is polynomial equality. Values are immutable once built through
/// the arithmetic operators; the compound assignments only touch `*this`.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(long c);  // NOLINT: integer constants convert implicitly
  BivarPoly(const Rational& c);  // NOLINT
  BivarPoly(const Integer& c);  // NOLINT

  static BivarPoly monomial(std::uint32_t x_exp, std::uint32_t y_exp, const Rational& coeff = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;

  Rational coefficient(const Monomial& m) const;
  HomogeneityProfile homogeneity() const;

  /// Largest exponent of x over all terms (0 for constants and zero).
  std::uint32_t x_degree() const;
  std::uint32_t y_degree() const;

  Rational evaluate(const Rational& x, const Rational& y) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const BivarPoly& other);

  BivarPoly operator-() const;

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

BivarPoly add(const BivarPoly& p, const BivarPoly& q);
BivarPoly mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly scale(const BivarPoly& p, const Rational& c);
BivarPoly pow(const BivarPoly& p, unsigned e);

/// Simultaneous substitution x <- x_image, y <- y_image, fully expanded.
BivarPoly substitute(const BivarPoly& p, const BivarPoly& x_image, const BivarPoly& y_image);

/// Coordinates of p over C_n = (x^{n-2k} y^k), k = 0..floor(n/2).
/// Throws MalformedElement if p has a monomial outside C_n.
std::vector<Rational> coordinates_canonical(const BivarPoly& p, std::uint32_t n);

/// Inverse of coordinates_canonical: sum of v[k] x^{n-2k} y^k.
BivarPoly from_canonical(const std::vector<Rational>& v, std::uint32_t n);

/// Text form with terms in descending x exponent, e.g. `x^4 + 3x^2y + y^2`.
std::string to_string(const BivarPoly& p);

/// JSON list of {"x", "y", "num", "den"} records in display order.
std::string to_json(const BivarPoly& p);
BivarPoly poly_from_json(const std::string& text);

}  // namespace bifib
