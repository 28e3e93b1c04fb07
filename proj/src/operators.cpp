#include "bifib/operators.hpp"

#include <chrono>

#include "bifib/errors.hpp"

namespace bifib {

OperatorPoly OperatorPoly::scalar(const BivarPoly& c) { return shift(0, c); }

OperatorPoly OperatorPoly::shift(std::uint32_t k, const BivarPoly& c) {
  OperatorPoly op;
  op.add_coeff(k, c);
  return op;
}

BivarPoly OperatorPoly::coefficient(std::uint32_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BivarPoly() : it->second;
}

std::optional<std::uint32_t> OperatorPoly::max_shift() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

void OperatorPoly::add_coeff(std::uint32_t k, const BivarPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_coeff(k, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_coeff(k, -c);
  return *this;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly r;
  return r -= *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly r;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) r.add_coeff(ka + kb, ca * cb);
  }
  return r;
}

OperatorPoly op_add(const OperatorPoly& a, const OperatorPoly& b) { return a + b; }

OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b) { return a * b; }

OperatorPoly op_pow(const OperatorPoly& a, unsigned e) {
  OperatorPoly result = OperatorPoly::identity();
  OperatorPoly base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

OperatorPoly op_scale(const OperatorPoly& a, const Rational& c) {
  OperatorPoly r;
  for (const auto& [k, p] : a.coeffs()) r += OperatorPoly::shift(k, scale(p, c));
  return r;
}

BivarPoly apply(const OperatorPoly& op, SequenceCache& seq, std::size_t n) {
  BivarPoly r;
  for (const auto& [k, c] : op.coeffs()) r += c * seq.at(n + k);
  return r;
}

std::string to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::A: return "A";
    case OperatorTag::B: return "B";
    case OperatorTag::C: return "C";
    case OperatorTag::D: return "D";
    case OperatorTag::E: return "E";
  }
  return "?";
}

std::uint32_t min_order(OperatorTag tag) {
  return (tag == OperatorTag::A || tag == OperatorTag::B) ? 0 : 1;
}

namespace {

OperatorPoly x_minus_e() { return OperatorPoly::scalar(BivarPoly::x()) - OperatorPoly::shift(1); }

OperatorPoly e_minus_x() { return OperatorPoly::shift(1) - OperatorPoly::scalar(BivarPoly::x()); }

OperatorPoly family_a(std::uint32_t m) {
  const OperatorPoly base = x_minus_e();
  OperatorPoly sum;
  for (std::uint32_t k = 1; k <= m; ++k) sum += OperatorPoly::shift(k) * op_pow(base, m - k);
  return op_pow(base, m) + op_scale(sum, 2);
}

OperatorPoly family_b(std::uint32_t m) { return -op_pow(e_minus_x(), m); }

OperatorPoly family_d(std::uint32_t m) {
  return op_pow(e_minus_x(), m - 1) * (OperatorPoly::scalar(BivarPoly::x()) - OperatorPoly::shift(1, 2));
}

}  // namespace

OperatorPoly build_family(OperatorFamily family) {
  const auto [tag, m] = family;
  if (m < min_order(tag)) {
    throw DomainError(to_string(tag) + "_m is defined for m >= " + std::to_string(min_order(tag)));
  }
  switch (tag) {
    case OperatorTag::A:
      return family_a(m);
    case OperatorTag::B:
      return family_b(m);
    case OperatorTag::C:
      return OperatorPoly::shift(m, 2) + op_scale(family_b(m), 2) - OperatorPoly::shift(m - 1, BivarPoly::x());
    case OperatorTag::D:
      return family_d(m);
    case OperatorTag::E:
      return op_scale(OperatorPoly::scalar(BivarPoly::x()) * family_a(m - 1) + family_d(m), Rational(1, 2)) +
             OperatorPoly::shift(m);
  }
  throw DomainError("unknown operator family");
}

std::vector<Rational> family_row(const OperatorPoly& op, std::uint32_t m) {
  if (auto top = op.max_shift(); top && *top > m) {
    throw MalformedElement("operator has shift power " + std::to_string(*top) + " above m = " + std::to_string(m));
  }
  std::vector<Rational> row(m + 1, Rational(0));
  for (const auto& [k, c] : op.coeffs()) {
    const Monomial expected{m - k, 0};
    if (c.size() != 1 || c.terms().begin()->first != expected) {
      throw MalformedElement("coefficient of E^" + std::to_string(k) + " is " + to_string(c) +
                             ", not a multiple of x^" + std::to_string(m - k));
    }
    row[k] = c.terms().begin()->second;
  }
  return row;
}

std::string to_string(const OperatorPoly& op, bool descending) {
  if (op.is_zero()) return "0";
  std::string out;
  auto emit = [&out](std::uint32_t k, const BivarPoly& c) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")·E^" + std::to_string(k);
  };
  if (descending) {
    for (auto it = op.coeffs().rbegin(); it != op.coeffs().rend(); ++it) emit(it->first, it->second);
  } else {
    for (const auto& [k, c] : op.coeffs()) emit(k, c);
  }
  return out;
}

Report check_relations(std::size_t n_max) {
  using clock = std::chrono::steady_clock;
  auto& u = shared_cache(SequenceKind::FibonacciU);
  auto& v = shared_cache(SequenceKind::LucasV);
  const std::string range = "n <= " + std::to_string(n_max);
  Report report;

  auto run = [&](const std::string& name, OperatorTag tag, auto&& holds) {
    const auto t0 = clock::now();
    IdentityTally tally(name, std::to_string(min_order(tag)) + " <= " + range);
    for (std::size_t n = min_order(tag); n <= n_max; ++n) {
      const OperatorPoly op = build_family({tag, static_cast<std::uint32_t>(n)});
      tally.record(holds(op, n), "n=" + std::to_string(n));
    }
    report.add(tally.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  };

  run("relation.a A_n V_n = 2U_{2n+1}", OperatorTag::A,
      [&](const OperatorPoly& op, std::size_t n) { return apply(op, v, n) == scale(u.at(2 * n + 1), 2); });
  run("relation.b B_n U_n = 0", OperatorTag::B,
      [&](const OperatorPoly& op, std::size_t n) { return apply(op, u, n).is_zero(); });
  run("relation.c C_n U_n = V_{2n-1}", OperatorTag::C,
      [&](const OperatorPoly& op, std::size_t n) { return apply(op, u, n) == v.at(2 * n - 1); });
  run("relation.d D_n V_{n-1} = 0", OperatorTag::D,
      [&](const OperatorPoly& op, std::size_t n) { return apply(op, v, n - 1).is_zero(); });
  run("relation.e E_n V_{n-1} = 2U_{2n}", OperatorTag::E,
      [&](const OperatorPoly& op, std::size_t n) { return apply(op, v, n - 1) == scale(u.at(2 * n), 2); });
  return report;
}

Report check_shift_law(std::size_t n_max) {
  using clock = std::chrono::steady_clock;
  const BivarPoly minus_y = -BivarPoly::y();
  const std::string range = "0 <= k <= n <= " + std::to_string(n_max);
  Report report;
  for (SequenceKind kind : {SequenceKind::FibonacciU, SequenceKind::LucasV}) {
    const auto t0 = clock::now();
    auto& seq = shared_cache(kind);
    const std::string w(1, symbol(kind));
    IdentityTally tally("lemma2.shift (x-E)^k " + w + "_n = (-y)^k " + w + "_{n-k}", range);
    OperatorPoly op = OperatorPoly::identity();
    BivarPoly factor = 1;
    for (std::size_t k = 0; k <= n_max; ++k) {
      if (k > 0) {
        op = op * x_minus_e();
        factor *= minus_y;
      }
      for (std::size_t n = k; n <= n_max; ++n) {
        tally.record(apply(op, seq, n) == factor * seq.at(n - k),
                     "k=" + std::to_string(k) + ",n=" + std::to_string(n));
      }
    }
    report.add(tally.finish(std::chrono::duration<double>(clock::now() - t0).count()));
  }
  return report;
}

}  // namespace bifib
