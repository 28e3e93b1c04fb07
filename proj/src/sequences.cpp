#include "bifib/sequences.hpp"

#include <chrono>

#include "bifib/binomial.hpp"
#include "bifib/errors.hpp"

namespace bifib {

std::string to_string(SequenceKind kind) {
  return kind == SequenceKind::FibonacciU ? "FibonacciU" : "LucasV";
}

char symbol(SequenceKind kind) { return kind == SequenceKind::FibonacciU ? 'U' : 'V'; }

SequenceCache::SequenceCache(SequenceKind kind) : kind_(kind) {
  if (kind == SequenceKind::FibonacciU) {
    values_.emplace_back(0);
    values_.emplace_back(1);
  } else {
    values_.emplace_back(2);
    values_.push_back(BivarPoly::x());
  }
}

const BivarPoly& SequenceCache::at(std::size_t n) {
  std::lock_guard lock(mutex_);
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    values_.push_back(x * values_[m - 1] + y * values_[m - 2]);
  }
  return values_[n];
}

std::size_t SequenceCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

SequenceCache& shared_cache(SequenceKind kind) {
  static SequenceCache u(SequenceKind::FibonacciU);
  static SequenceCache v(SequenceKind::LucasV);
  return kind == SequenceKind::FibonacciU ? u : v;
}

const BivarPoly& u_poly(std::size_t n) { return shared_cache(SequenceKind::FibonacciU).at(n); }

const BivarPoly& v_poly(std::size_t n) { return shared_cache(SequenceKind::LucasV).at(n); }

BivarPoly u_poly_closed(std::size_t n) {
  if (n == 0) throw DomainError("u_poly_closed needs n >= 1");
  // U_{m+1} = sum_k C(m-k, k) x^{m-2k} y^k with m = n - 1.
  const long m = static_cast<long>(n) - 1;
  BivarPoly p;
  for (long k = 0; 2 * k <= m; ++k) {
    p += BivarPoly::monomial(static_cast<std::uint32_t>(m - 2 * k), static_cast<std::uint32_t>(k),
                             Rational(binomial(m - k, k)));
  }
  return p;
}

BivarPoly v_poly_closed(std::size_t n) {
  if (n == 0) throw DomainError("v_poly_closed needs n >= 1; V_0 = 2 is a seed");
  const long m = static_cast<long>(n);
  BivarPoly p;
  for (long k = 0; 2 * k <= m; ++k) {
    Rational c(binomial(m - k, k) * m, Integer(m - k));
    c.canonicalize();
    if (c.get_den() != 1) {
      throw IntegralityViolation("V_" + std::to_string(n) + " weight at k=" + std::to_string(k) + " is not integral");
    }
    p += BivarPoly::monomial(static_cast<std::uint32_t>(m - 2 * k), static_cast<std::uint32_t>(k), c);
  }
  return p;
}

Report check_lemma2(std::size_t n_max) {
  using clock = std::chrono::steady_clock;
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly minus_y = -y;
  const std::string range = "n <= " + std::to_string(n_max);
  Report report;

  auto t0 = clock::now();
  IdentityTally item2("lemma2.lucas-via-u V_n = 2U_{n+1} - xU_n", range);
  for (std::size_t n = 0; n <= n_max; ++n) {
    item2.record(v_poly(n) == scale(u_poly(n + 1), 2) - x * u_poly(n), "n=" + std::to_string(n));
  }
  report.add(item2.finish(std::chrono::duration<double>(clock::now() - t0).count()));

  t0 = clock::now();
  IdentityTally item3("lemma2.lucas-via-uy V_n = U_{n+1} + yU_{n-1}", "1 <= " + range);
  for (std::size_t n = 1; n <= n_max; ++n) {
    item3.record(v_poly(n) == u_poly(n + 1) + y * u_poly(n - 1), "n=" + std::to_string(n));
  }
  report.add(item3.finish(std::chrono::duration<double>(clock::now() - t0).count()));

  // Running sum S_n = sum_{k=1..n} (-y)^{n-k} V_{2k} obeys S_n = -y S_{n-1} + V_{2n}.
  t0 = clock::now();
  IdentityTally item4("lemma2.even-sum sum (-y)^{n-k} V_{2k} = U_{2n+1} - (-y)^n", range);
  BivarPoly running;
  BivarPoly minus_y_pow = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      running = minus_y * running + v_poly(2 * n);
      minus_y_pow *= minus_y;
    }
    item4.record(running == u_poly(2 * n + 1) - minus_y_pow, "n=" + std::to_string(n));
  }
  report.add(item4.finish(std::chrono::duration<double>(clock::now() - t0).count()));

  t0 = clock::now();
  IdentityTally simple("lemma2.simple V_{2n} = 2U_{2n+1} - xU_{2n}", range);
  for (std::size_t n = 0; n <= n_max; ++n) {
    simple.record(v_poly(2 * n) == scale(u_poly(2 * n + 1), 2) - x * u_poly(2 * n), "n=" + std::to_string(n));
  }
  report.add(simple.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  return report;
}

}  // namespace bifib
