#include <random>

#include <gtest/gtest.h>

#include "bifib/errors.hpp"
#include "bifib/poly.hpp"
#include "bifib/sequences.hpp"
#include "support/oracles.hpp"

using bifib::BivarPoly;
using bifib::Rational;

namespace {

const BivarPoly x = BivarPoly::x();
const BivarPoly y = BivarPoly::y();

BivarPoly mono(unsigned a, unsigned b, long c = 1) { return BivarPoly::monomial(a, b, c); }

bool canonical(const BivarPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Monomial, GradedThenByXExponent) {
  EXPECT_LT((bifib::Monomial{0, 1}), (bifib::Monomial{2, 0}));
  EXPECT_LT((bifib::Monomial{0, 2}), (bifib::Monomial{1, 1}));
  EXPECT_EQ((bifib::Monomial{3, 1}.weight()), 5u);
}

TEST(BivarPoly, Add) {
  EXPECT_EQ(bifib::add(x, y), x + y);
  EXPECT_EQ(to_string(x + y), "x + y");
  const BivarPoly p = mono(2, 0) + mono(0, 1, 3);
  EXPECT_EQ(bifib::add(p, BivarPoly()), p);
  const BivarPoly sum = bifib::add(mono(2, 0) + y, mono(2, 0, -1) + y);
  EXPECT_EQ(sum, mono(0, 1, 2));
  EXPECT_EQ(sum.size(), 1u);
}

TEST(BivarPoly, Mul) {
  EXPECT_EQ(bifib::mul(x, mono(2, 0) + mono(0, 1, 2)), mono(3, 0) + mono(1, 1, 2));
  const BivarPoly p = mono(4, 1, -3) + 7;
  EXPECT_EQ(bifib::mul(p, 1), p);
  EXPECT_EQ(bifib::mul(x + y, x - y), mono(2, 0) - mono(0, 2));
  EXPECT_TRUE(bifib::mul(p, 0).is_zero());
}

TEST(BivarPoly, Scale) {
  EXPECT_EQ(bifib::scale(mono(2, 0) + mono(0, 1, 2), 2), mono(2, 0, 2) + mono(0, 1, 4));
  EXPECT_TRUE(bifib::scale(mono(2, 0) + 1, 0).is_zero());
  EXPECT_EQ(bifib::scale(bifib::scale(bifib::u_poly(3), 2), Rational(1, 2)), mono(2, 0) + y);
}

TEST(BivarPoly, Substitute) {
  const BivarPoly two_x = mono(1, 0, 2);
  EXPECT_EQ(bifib::substitute(mono(2, 0) + y, two_x, 1), mono(2, 0, 4) + 1);
  const BivarPoly p = mono(3, 2, 5) - mono(0, 1) + 4;
  EXPECT_EQ(bifib::substitute(p, x, y), p);
  // V_2(2x, 1) = 4x^2 + 2; halved gives 2x^2 + 1.
  const BivarPoly v2 = bifib::substitute(mono(2, 0) + mono(0, 1, 2), two_x, 1);
  EXPECT_EQ(v2, mono(2, 0, 4) + 2);
  EXPECT_EQ(bifib::scale(v2, Rational(1, 2)), mono(2, 0, 2) + 1);
}

TEST(BivarPoly, CoordinatesCanonical) {
  using V = std::vector<Rational>;
  EXPECT_EQ(bifib::coordinates_canonical(bifib::u_poly(5), 4), (V{1, 3, 1}));
  EXPECT_EQ(bifib::coordinates_canonical(bifib::v_poly(2), 2), (V{1, 2}));
  EXPECT_EQ(bifib::coordinates_canonical(BivarPoly(), 6), (V{0, 0, 0, 0}));
  EXPECT_THROW(bifib::coordinates_canonical(x, 2), bifib::MalformedElement);
  EXPECT_THROW(bifib::coordinates_canonical(mono(2, 0) + 1, 2), bifib::MalformedElement);
}

TEST(BivarPoly, Rendering) {
  EXPECT_EQ(to_string(bifib::u_poly(5)), "x^4 + 3x^2y + y^2");
  EXPECT_EQ(to_string(BivarPoly()), "0");
  EXPECT_EQ(to_string(BivarPoly(-2)), "-2");
  EXPECT_EQ(to_string(mono(3, 1, -1) - mono(1, 2, 2)), "-x^3y - 2xy^2");
  EXPECT_EQ(to_string(BivarPoly::monomial(1, 0, Rational(-1, 2)) + 1), "-(1/2)x + 1");
  EXPECT_EQ(to_json(mono(2, 0) + mono(0, 1, 2)),
            R"([{"den":"1","num":"1","x":2,"y":0},{"den":"1","num":"2","x":0,"y":1}])");
}

TEST(BivarPoly, JsonRoundTripKeepsBigRationals) {
  const Rational big(bifib::Integer("123456789012345678901234567890"), bifib::Integer("11"));
  ASSERT_NE(big.get_den(), 1);
  const BivarPoly p = BivarPoly::monomial(5, 3, big) - mono(0, 0, 11);
  EXPECT_EQ(bifib::poly_from_json(to_json(p)), p);
  EXPECT_THROW(bifib::poly_from_json("{\"x\": 1}"), bifib::MalformedElement);
  EXPECT_THROW(bifib::poly_from_json(R"([{"x":1,"y":0,"num":"1","den":"0"}])"), bifib::MalformedElement);
}

TEST(BivarPoly, HomogeneityAndIntegrality) {
  EXPECT_EQ(bifib::u_poly(7).homogeneity().weight, 6u);
  EXPECT_FALSE((x + y).homogeneity().homogeneous());
  EXPECT_FALSE(BivarPoly().homogeneity().homogeneous());
  EXPECT_TRUE(bifib::v_poly(9).is_integral());
  EXPECT_FALSE(BivarPoly(Rational(1, 3)).is_integral());
}

TEST(BivarPoly, Evaluate) {
  EXPECT_EQ(bifib::u_poly(10).evaluate(1, 1), 55);
  EXPECT_EQ((mono(2, 1, 3) - 1).evaluate(Rational(1, 2), 4), 2);
}

// Ring axioms on random small polynomials.
TEST(BivarPolyProperty, RingAxioms) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const BivarPoly p = oracle::random_poly(rng);
    const BivarPoly q = oracle::random_poly(rng);
    const BivarPoly r = oracle::random_poly(rng);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_TRUE((p - p).is_zero());
    ASSERT_TRUE(canonical(p * q - q * r + r));
  }
}

TEST(BivarPolyProperty, SubstituteIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const BivarPoly p = oracle::random_poly(rng, 4, 4);
    const BivarPoly q = oracle::random_poly(rng, 4, 4);
    const BivarPoly xi = oracle::random_poly(rng, 2, 2);
    const BivarPoly yi = oracle::random_poly(rng, 2, 2);
    ASSERT_EQ(bifib::substitute(p * q, xi, yi), bifib::substitute(p, xi, yi) * bifib::substitute(q, xi, yi));
    ASSERT_EQ(bifib::substitute(p + q, xi, yi), bifib::substitute(p, xi, yi) + bifib::substitute(q, xi, yi));
  }
}

TEST(BivarPolyProperty, CoordinatesAreLeftInverseOfExpansion) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (std::uint32_t n = 0; n <= 40; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> v(n / 2 + 1);
      for (auto& c : v) c = coeff(rng);
      ASSERT_EQ(bifib::coordinates_canonical(bifib::from_canonical(v, n), n), v) << "n=" << n;
    }
  }
}
