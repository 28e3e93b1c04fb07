#include <random>

#include <gtest/gtest.h>

#include "bifib/coefficients.hpp"
#include "bifib/errors.hpp"
#include "bifib/operators.hpp"
#include "support/oracles.hpp"

using bifib::BivarPoly;
using bifib::OperatorFamily;
using bifib::OperatorPoly;
using bifib::OperatorTag;
using bifib::Rational;

namespace {

const BivarPoly x = BivarPoly::x();
const BivarPoly y = BivarPoly::y();

OperatorPoly X() { return OperatorPoly::scalar(x); }
OperatorPoly E(std::uint32_t k = 1, const BivarPoly& c = 1) { return OperatorPoly::shift(k, c); }

bifib::SequenceCache& U() { return bifib::shared_cache(bifib::SequenceKind::FibonacciU); }
bifib::SequenceCache& V() { return bifib::shared_cache(bifib::SequenceKind::LucasV); }

OperatorPoly random_operator(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> shift(0, 4);
  OperatorPoly op;
  for (int i = 0; i < 3; ++i) op += E(shift(rng), oracle::random_poly(rng, 3, 3));
  return op;
}

}  // namespace

TEST(Operators, RingOperations) {
  const OperatorPoly sq = bifib::op_mul(X() - E(), X() - E());
  EXPECT_EQ(sq, OperatorPoly::scalar(BivarPoly::monomial(2, 0)) + E(1, BivarPoly::monomial(1, 0, -2)) + E(2));
  EXPECT_EQ(to_string(sq), "(x^2)·E^0 + (-2x)·E^1 + (1)·E^2");
  EXPECT_EQ(to_string(sq, true), "(1)·E^2 + (-2x)·E^1 + (x^2)·E^0");

  const OperatorPoly a = E(3, y) + X();
  EXPECT_EQ(bifib::op_mul(a, OperatorPoly::identity()), a);
  EXPECT_EQ(bifib::op_add(a, -a), OperatorPoly());

  // (E - x)(x - 2E) expanded by hand: -x^2 + 3xE - 2E^2.
  const OperatorPoly p = bifib::op_mul(E() - X(), X() - E(1, 2));
  EXPECT_EQ(p, OperatorPoly::scalar(BivarPoly::monomial(2, 0, -1)) + E(1, BivarPoly::monomial(1, 0, 3)) + E(2, -2));
}

TEST(Operators, Apply) {
  EXPECT_EQ(bifib::apply(E(), U(), 3), BivarPoly::monomial(3, 0) + BivarPoly::monomial(1, 1, 2));
  EXPECT_EQ(bifib::apply(X() - E(), U(), 5), BivarPoly::monomial(3, 1, -1) + BivarPoly::monomial(1, 2, -2));
  EXPECT_TRUE(bifib::apply(X() - E(1, 2), V(), 0).is_zero());
  EXPECT_TRUE(bifib::apply(OperatorPoly(), V(), 4).is_zero());
}

TEST(Operators, BuildFamilySmallCases) {
  EXPECT_EQ(bifib::build_family({OperatorTag::B, 0}), OperatorPoly::scalar(-1));
  EXPECT_EQ(bifib::build_family({OperatorTag::D, 1}), X() - E(1, 2));
  EXPECT_EQ(bifib::family_row(bifib::build_family({OperatorTag::A, 2}), 2), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(bifib::family_row(bifib::build_family({OperatorTag::B, 0}), 0), (std::vector<Rational>{-1}));
  EXPECT_EQ(bifib::family_row(bifib::build_family({OperatorTag::D, 1}), 1), (std::vector<Rational>{1, -2}));
}

TEST(Operators, DomainErrors) {
  EXPECT_THROW(bifib::build_family({OperatorTag::C, 0}), bifib::DomainError);
  EXPECT_THROW(bifib::build_family({OperatorTag::D, 0}), bifib::DomainError);
  EXPECT_THROW(bifib::build_family({OperatorTag::E, 0}), bifib::DomainError);
  EXPECT_NO_THROW(bifib::build_family({OperatorTag::A, 0}));
}

TEST(Operators, FamilyRowRejectsNonFamilyShapes) {
  EXPECT_THROW(bifib::family_row(E(1, y), 1), bifib::MalformedElement);
  EXPECT_THROW(bifib::family_row(E(3), 2), bifib::MalformedElement);
  EXPECT_THROW(bifib::family_row(X(), 2), bifib::MalformedElement);
}

// Expanded operator coefficients against the closed forms and, for B, Pascal's rule.
TEST(OperatorsProperty, ExpansionMatchesClosedForms) {
  const auto pascal = oracle::pascal(40);
  for (std::uint32_t m = 0; m <= 40; ++m) {
    for (auto tag : {OperatorTag::A, OperatorTag::B, OperatorTag::C, OperatorTag::D, OperatorTag::E}) {
      if (m < bifib::min_order(tag)) continue;
      const auto row = bifib::family_row(bifib::build_family({tag, m}), m);
      const auto coeff = static_cast<bifib::CoeffTag>(static_cast<int>(tag));
      const bool last_is_zero = tag == OperatorTag::C || tag == OperatorTag::E;
      for (std::uint32_t k = 0; k <= m; ++k) {
        if (last_is_zero && k == m) {
          ASSERT_EQ(row[k], 0) << bifib::to_string(tag) << m;
          continue;
        }
        ASSERT_EQ(row[k], Rational(bifib::closed_value(coeff, m, k))) << bifib::to_string(tag) << m << " k=" << k;
      }
      if (tag == OperatorTag::B) {
        for (std::uint32_t k = 0; k <= m; ++k) {
          ASSERT_EQ(row[k], Rational(((m - k + 1) % 2 ? -1 : 1) * pascal[m][k]));
        }
      }
    }
  }
}

TEST(OperatorsProperty, EFamilyIsIntegral) {
  for (std::uint32_t m = 1; m <= 40; ++m) {
    const auto op = bifib::build_family({OperatorTag::E, m});
    for (const auto& [k, c] : op.coeffs()) {
      ASSERT_TRUE(c.is_integral()) << "m=" << m << " k=" << k;
    }
  }
}

TEST(OperatorsProperty, Commutative) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 300; ++i) {
    const OperatorPoly a = random_operator(rng);
    const OperatorPoly b = random_operator(rng);
    ASSERT_EQ(bifib::op_mul(a, b), bifib::op_mul(b, a));
  }
}

TEST(OperatorsProperty, ApplicationIsLinear) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const OperatorPoly a = random_operator(rng);
    const OperatorPoly b = random_operator(rng);
    const std::size_t n = i % 10;
    ASSERT_EQ(bifib::apply(a + b, U(), n), bifib::apply(a, U(), n) + bifib::apply(b, U(), n));
    // Composition acts as successive application: (aE^k) applied at n = a applied at n+k.
    ASSERT_EQ(bifib::apply(a * E(2), V(), n), bifib::apply(a, V(), n + 2));
  }
}

TEST(Operators, RelationsAndShiftLaw) {
  const auto relations = bifib::check_relations(15);
  EXPECT_TRUE(relations.passed()) << to_text(relations);
  EXPECT_EQ(relations.checks().size(), 5u);
  const auto shift = bifib::check_shift_law(20);
  EXPECT_TRUE(shift.passed()) << to_text(shift);
}

TEST(Operators, RelationSpotChecks) {
  // b. at n = 3
  EXPECT_TRUE(bifib::apply(bifib::build_family({OperatorTag::B, 3}), U(), 3).is_zero());
  // c. at n = 2: C_2 U at 2 = 2U_4 - xU_3 = V_3
  EXPECT_EQ(bifib::apply(bifib::build_family({OperatorTag::C, 2}), U(), 2), bifib::v_poly(3));
  EXPECT_EQ(bifib::scale(bifib::u_poly(4), 2) - x * bifib::u_poly(3), bifib::v_poly(3));
}
