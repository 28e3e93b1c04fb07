#include "bifib/specializations.hpp"

#include <chrono>

#include "bifib/bases.hpp"
#include "bifib/coefficients.hpp"

namespace bifib {

const SpecializationRule& chebyshev_first_kind_rule() {
  static const SpecializationRule rule{"chebyshev-T", BivarPoly::monomial(1, 0, 2), BivarPoly(-1), Rational(1, 2)};
  return rule;
}

const SpecializationRule& chebyshev_second_kind_rule() {
  static const SpecializationRule rule{"chebyshev-U", BivarPoly::monomial(1, 0, 2), BivarPoly(-1), Rational(1)};
  return rule;
}

const SpecializationRule& double_x_rule() {
  static const SpecializationRule rule{"double-x", BivarPoly::monomial(1, 0, 2), BivarPoly(1), Rational(1)};
  return rule;
}

BivarPoly chebyshev_T(std::size_t n) { return chebyshev_first_kind_rule().apply(v_poly(n)); }

BivarPoly chebyshev_U(std::size_t n) { return chebyshev_second_kind_rule().apply(u_poly(n + 1)); }

Integer evaluate_numbers(SequenceKind kind, std::size_t n, const Integer& x0, const Integer& y0) {
  const Rational value = shared_cache(kind).at(n).evaluate(Rational(x0), Rational(y0));
  return value.get_num();
}

Report check_chebyshev(std::size_t n_max) {
  using clock = std::chrono::steady_clock;
  const BivarPoly two_x = BivarPoly::monomial(1, 0, 2);
  const std::string range = "n <= " + std::to_string(n_max);
  Report report;

  auto recurrence = [&](const std::string& name, auto&& poly, const BivarPoly& seed0, const BivarPoly& seed1) {
    const auto t0 = clock::now();
    IdentityTally tally(name, range);
    tally.record(poly(0) == seed0, "seed n=0");
    if (n_max >= 1) tally.record(poly(1) == seed1, "seed n=1");
    for (std::size_t n = 2; n <= n_max; ++n) {
      tally.record(poly(n) == two_x * poly(n - 1) - poly(n - 2), "n=" + std::to_string(n));
    }
    report.add(tally.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  };
  recurrence("chebyshev.T T_n = 2xT_{n-1} - T_{n-2}", chebyshev_T, BivarPoly(1), BivarPoly::x());
  recurrence("chebyshev.U U_n = 2xU_{n-1} - U_{n-2}", chebyshev_U, BivarPoly(1), two_x);

  IdentityTally parity("chebyshev.T parity of exponents", range);
  IdentityTally univariate("chebyshev.TU univariate and integral", range);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const BivarPoly t = chebyshev_T(n);
    const BivarPoly u = chebyshev_U(n);
    bool same_parity = true;
    for (const auto& [m, c] : t.terms()) same_parity = same_parity && (m.x_exp % 2 == n % 2);
    parity.record(same_parity, "n=" + std::to_string(n));
    univariate.record(t.y_degree() == 0 && u.y_degree() == 0 && t.is_integral() && u.is_integral(),
                      "n=" + std::to_string(n));
  }
  report.add(parity.finish());
  report.add(univariate.finish());
  return report;
}

Report check_theorem_transfer(std::uint32_t n_max) {
  using clock = std::chrono::steady_clock;
  Report report;
  for (const SpecializationRule* rule : {&double_x_rule(), &chebyshev_first_kind_rule()}) {
    const auto t0 = clock::now();
    // Only the substitution matters here; post_scale multiplies both sides alike.
    auto subst = [rule](const BivarPoly& p) { return substitute(p, rule->x_image, rule->y_image); };
    IdentityTally tally("transfer." + rule->name + " theorems a-e under (x,y) -> (" + to_string(rule->x_image) +
                            "," + to_string(rule->y_image) + ")",
                        "n <= " + std::to_string(n_max));
    for (auto tag : {CoeffTag::a, CoeffTag::b, CoeffTag::c, CoeffTag::d, CoeffTag::e}) {
      const std::uint32_t first = tag == CoeffTag::a ? 0 : 1;
      for (std::uint32_t n = first; n <= n_max; ++n) {
        const auto terms = basis_terms(target_basis(tag, n));
        BivarPoly rhs;
        for (std::size_t k = 0; k < terms.size(); ++k) {
          rhs += scale(pow(rule->x_image, terms[k].x_power) * subst(shared_cache(terms[k].kind).at(terms[k].index)),
                       Rational(closed_value(tag, n, static_cast<long>(k))));
        }
        tally.record(rhs == subst(target_poly(tag, n)), to_string(tag) + ",n=" + std::to_string(n));
      }
    }
    report.add(tally.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  }
  return report;
}

}  // namespace bifib
