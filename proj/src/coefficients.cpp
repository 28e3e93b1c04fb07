#include "bifib/coefficients.hpp"

#include <chrono>
#include <sstream>

#include "bifib/binomial.hpp"
#include "bifib/errors.hpp"
#include "bifib/sequences.hpp"

namespace bifib {

std::string to_string(CoeffTag tag) {
  switch (tag) {
    case CoeffTag::a: return "a";
    case CoeffTag::b: return "b";
    case CoeffTag::c: return "c";
    case CoeffTag::d: return "d";
    case CoeffTag::e: return "e";
  }
  return "?";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Closed: return "closed";
    case Method::Recurrence: return "recurrence";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::optional<CoeffTag> parse_coeff_tag(std::string_view name) {
  for (auto t : {CoeffTag::a, CoeffTag::b, CoeffTag::c, CoeffTag::d, CoeffTag::e}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto m : {Method::Closed, Method::Recurrence, Method::Oracle}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::uint32_t min_row(CoeffTag tag) { return (tag == CoeffTag::a || tag == CoeffTag::b) ? 0 : 1; }

std::size_t row_length(CoeffTag tag, std::uint32_t n) { return tag == CoeffTag::e ? n : n + 1; }

std::size_t decomposition_length(CoeffTag tag, std::uint32_t n) { return tag == CoeffTag::a ? n + 1 : n; }

BasisSpec target_basis(CoeffTag tag, std::uint32_t n) {
  switch (tag) {
    case CoeffTag::a: return {BasisFamily::BV, n};
    case CoeffTag::b:
    case CoeffTag::c: return {BasisFamily::BUstar, n};
    case CoeffTag::d:
    case CoeffTag::e: return {BasisFamily::BVstar, n};
  }
  throw DomainError("unknown family");
}

BivarPoly target_poly(CoeffTag tag, std::uint32_t n) {
  if (n < min_row(tag) || (tag == CoeffTag::b && n == 0)) {
    throw DomainError("family " + to_string(tag) + " has no decomposition at n = " + std::to_string(n));
  }
  switch (tag) {
    case CoeffTag::a: return scale(u_poly(2 * n + 1), 2);
    case CoeffTag::b: return u_poly(2 * n);
    case CoeffTag::c: return v_poly(2 * n - 1);
    case CoeffTag::d: return scale(v_poly(2 * n - 1), 2);
    case CoeffTag::e: return scale(u_poly(2 * n), 2);
  }
  throw DomainError("unknown family");
}

std::string target_label(CoeffTag tag, std::uint32_t n) {
  switch (tag) {
    case CoeffTag::a: return "2U_" + std::to_string(2 * n + 1);
    case CoeffTag::b: return "U_" + std::to_string(2 * n);
    case CoeffTag::c: return "V_" + std::to_string(2 * n - 1);
    case CoeffTag::d: return "2V_" + std::to_string(2 * n - 1);
    case CoeffTag::e: return "2U_" + std::to_string(2 * n);
  }
  return "?";
}

namespace {

void check_index(const char* family, long n, long k, long n_min) {
  if (n < n_min || k < 0 || k > n) {
    std::ostringstream msg;
    msg << family << "_{" << n << "," << k << "} is outside 0 <= k <= n, n >= " << n_min;
    throw IndexError(msg.str());
  }
}

long delta(long i, long j) { return i == j ? 1 : 0; }

}  // namespace

Integer a_closed(long n, long k) {
  check_index("a", n, k, 0);
  Integer sum = 0;
  for (long j = 0; j <= n; ++j) sum += sign_pow(j) * binomial(j, n - k);
  return sign_pow(k + 1) * binomial(n, k) + 2 * sign_pow(n - k) * sum;
}

Integer b_closed(long n, long k) {
  check_index("b", n, k, 0);
  return sign_pow(n - k + 1) * binomial(n, k);
}

Integer c_closed(long n, long k) {
  check_index("c", n, k, 1);
  return 2 * sign_pow(n - k + 1) * binomial(n, k) - delta(n - 1, k);
}

Integer d_closed(long n, long k) {
  check_index("d", n, k, 1);
  Integer numer = binomial(n, k) * (n + k);
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw IntegralityViolation("d_{" + std::to_string(n) + "," + std::to_string(k) + "} is not an integer");
  }
  mpz_divexact_ui(numer.get_mpz_t(), numer.get_mpz_t(), static_cast<unsigned long>(n));
  return sign_pow(n - k + 1) * numer;
}

Integer e_closed(long n, long k) {
  check_index("e", n, k, 1);
  Integer sum = d_closed(n, k);
  if (k <= n - 1) sum += a_closed(n - 1, k);
  if (!mpz_even_p(sum.get_mpz_t())) {
    throw IntegralityViolation("e_{" + std::to_string(n) + "," + std::to_string(k) + "} is not an integer");
  }
  return Integer(sum / 2) + delta(n, k);
}

Integer closed_value(CoeffTag tag, long n, long k) {
  switch (tag) {
    case CoeffTag::a: return a_closed(n, k);
    case CoeffTag::b: return b_closed(n, k);
    case CoeffTag::c: return c_closed(n, k);
    case CoeffTag::d: return d_closed(n, k);
    case CoeffTag::e: return e_closed(n, k);
  }
  throw IndexError("unknown family");
}

CoeffTriangle closed_triangle(CoeffTag tag, std::uint32_t n_max) {
  CoeffTriangle t{tag, Method::Closed, min_row(tag), {}};
  for (std::uint32_t n = t.first_row; n <= n_max; ++n) {
    std::vector<Integer> row;
    for (std::size_t k = 0; k < row_length(tag, n); ++k) row.push_back(closed_value(tag, n, static_cast<long>(k)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// Entry k of a row, zero past its end.
Integer entry(const std::vector<Integer>& row, std::size_t k) { return k < row.size() ? row[k] : Integer(0); }

}  // namespace

CoeffTriangle a_recur_triangle(std::uint32_t n_max) {
  CoeffTriangle t{CoeffTag::a, Method::Recurrence, 0, {{Integer(1)}}};
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> row{Integer(1)};
    for (std::uint32_t k = 1; k <= n; ++k) row.push_back(entry(prev, k) - prev[k - 1] + 2 * delta(n, k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle b_recur_triangle(std::uint32_t n_max) {
  CoeffTriangle t{CoeffTag::b, Method::Recurrence, 0, {{Integer(-1)}}};
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> row{Integer(sign_pow(n + 1))};
    for (std::uint32_t k = 1; k <= n; ++k) row.push_back(-entry(prev, k) + prev[k - 1]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle c_recur_triangle(std::uint32_t n_max) {
  CoeffTriangle t{CoeffTag::c, Method::Recurrence, 1, {{Integer(1), Integer(-2)}}};
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> row{Integer(2 * sign_pow(n + 1) - delta(n, 1))};
    for (std::uint32_t k = 1; k <= n; ++k) row.push_back(-entry(prev, k) + prev[k - 1] - delta(n, k + 2));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle d_recur_triangle(std::uint32_t n_max) {
  CoeffTriangle t{CoeffTag::d, Method::Recurrence, 1, {{Integer(1), Integer(-2)}}};
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> row{Integer(sign_pow(n + 1))};
    for (std::uint32_t k = 1; k <= n; ++k) row.push_back(-entry(prev, k) + prev[k - 1]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle e_recur_triangle(std::uint32_t n_max) {
  CoeffTriangle t{CoeffTag::e, Method::Recurrence, 1, {{Integer(1)}}};
  const CoeffTriangle a = a_recur_triangle(n_max == 0 ? 0 : n_max - 1);
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> row{Integer((1 - sign_pow(n)) / 2)};
    for (std::uint32_t k = 1; k < n; ++k) row.push_back(-entry(prev, k) + prev[k - 1] + entry(a.row(n - 1), k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle recurrence_triangle(CoeffTag tag, std::uint32_t n_max) {
  if (n_max < min_row(tag)) throw IndexError("row " + std::to_string(n_max) + " below family domain");
  switch (tag) {
    case CoeffTag::a: return a_recur_triangle(n_max);
    case CoeffTag::b: return b_recur_triangle(n_max);
    case CoeffTag::c: return c_recur_triangle(n_max);
    case CoeffTag::d: return d_recur_triangle(n_max);
    case CoeffTag::e: return e_recur_triangle(n_max);
  }
  throw IndexError("unknown family");
}

CoeffTriangle oracle_triangle(CoeffTag tag, std::uint32_t n_max) {
  const std::uint32_t first = tag == CoeffTag::a ? 0 : 1;
  CoeffTriangle t{tag, Method::Oracle, first, {}};
  for (std::uint32_t n = first; n <= n_max; ++n) {
    const Decomposition d = decompose(target_poly(tag, n), target_basis(tag, n));
    std::vector<Integer> row;
    for (const auto& c : d.coords) {
      if (c.get_den() != 1) {
        throw IntegralityViolation("oracle coordinate " + c.get_str() + " for family " + to_string(tag) +
                                   " at n = " + std::to_string(n));
      }
      row.push_back(c.get_num());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CoeffTriangle make_triangle(CoeffTag tag, std::uint32_t n_max, Method method) {
  if (n_max < min_row(tag)) throw IndexError("row " + std::to_string(n_max) + " below family domain");
  switch (method) {
    case Method::Closed: return closed_triangle(tag, n_max);
    case Method::Recurrence: return recurrence_triangle(tag, n_max);
    case Method::Oracle: return oracle_triangle(tag, n_max);
  }
  throw IndexError("unknown method");
}

Report cross_check(CoeffTag tag, std::uint32_t n_max, bool with_oracle) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::string fam = to_string(tag);
  const std::string range = std::to_string(min_row(tag)) + " <= n <= " + std::to_string(n_max);
  Report report;

  const CoeffTriangle closed = closed_triangle(tag, n_max);
  const CoeffTriangle recur = recurrence_triangle(tag, n_max);
  IdentityTally cr("triangle." + fam + " closed=recurrence", range);
  for (std::uint32_t n = closed.first_row; n <= n_max; ++n) {
    for (std::size_t k = 0; k < row_length(tag, n); ++k) {
      const Integer& c = closed.row(n)[k];
      const Integer r = entry(recur.row(n), k);
      cr.record(c == r, "(" + fam + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": closed=" +
                            c.get_str() + " recurrence=" + r.get_str() + ")");
    }
  }
  report.add(cr.finish(std::chrono::duration<double>(clock::now() - t0).count()));

  if (with_oracle) {
    const auto t1 = clock::now();
    IdentityTally co("triangle." + fam + " closed=oracle", range);
    try {
      const CoeffTriangle oracle = oracle_triangle(tag, n_max);
      for (std::uint32_t n = oracle.first_row; n <= n_max; ++n) {
        const auto& orow = oracle.row(n);
        co.record(orow.size() == decomposition_length(tag, n), "n=" + std::to_string(n) + " length");
        for (std::size_t k = 0; k < orow.size(); ++k) {
          const Integer& c = closed.row(n)[k];
          co.record(c == orow[k], "(" + fam + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                      ": closed=" + c.get_str() + " oracle=" + orow[k].get_str() + ")");
        }
      }
    } catch (const Error& e) {
      co.record(false, e.what());
    }
    report.add(co.finish(std::chrono::duration<double>(clock::now() - t1).count()));
  }
  return report;
}

namespace {

std::string theorem_statement(CoeffTag tag) {
  switch (tag) {
    case CoeffTag::a: return "2U_{2n+1} = sum a_{n,k} x^{n-k} V_{n+k}";
    case CoeffTag::b: return "U_{2n} = sum b_{n,k} x^{n-k} U_{n+k}";
    case CoeffTag::c: return "V_{2n-1} = sum c_{n,k} x^{n-k} U_{n+k}";
    case CoeffTag::d: return "2V_{2n-1} = sum d_{n,k} x^{n-k} V_{n+k-1}";
    case CoeffTag::e: return "2U_{2n} = sum e_{n,k} x^{n-k} V_{n+k-1}";
  }
  return "?";
}

}  // namespace

Report check_theorems(std::uint32_t n_max) {
  using clock = std::chrono::steady_clock;
  Report report;
  for (auto tag : {CoeffTag::a, CoeffTag::b, CoeffTag::c, CoeffTag::d, CoeffTag::e}) {
    const auto t0 = clock::now();
    const std::uint32_t first = tag == CoeffTag::a ? 0 : 1;
    IdentityTally tally("theorem." + to_string(tag) + " " + theorem_statement(tag),
                        std::to_string(first) + " <= n <= " + std::to_string(n_max));
    for (std::uint32_t n = first; n <= n_max; ++n) {
      const BasisSpec spec = target_basis(tag, n);
      const auto terms = basis_terms(spec);
      BivarPoly rhs;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        rhs += BivarPoly::monomial(terms[k].x_power, 0, Rational(closed_value(tag, n, static_cast<long>(k)))) *
               shared_cache(terms[k].kind).at(terms[k].index);
      }
      tally.record(rhs == target_poly(tag, n), target_label(tag, n));
    }
    report.add(tally.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  }
  // The n = 0 instance of family a is the seed identity 2U_1 = V_0.
  report.add({"theorem.a.seed 2U_1 = V_0", scale(u_poly(1), 2) == v_poly(0), "n=0", 0.0});
  return report;
}

}  // namespace bifib
