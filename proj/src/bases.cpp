#include "bifib/bases.hpp"

#include <chrono>

#include <json.hpp>

#include "bifib/errors.hpp"

namespace bifib {

std::string to_string(BasisFamily family) {
  switch (family) {
    case BasisFamily::Canonical: return "Canonical";
    case BasisFamily::BU: return "BU";
    case BasisFamily::BV: return "BV";
    case BasisFamily::BUstar: return "BUstar";
    case BasisFamily::BVstar: return "BVstar";
  }
  return "?";
}

std::optional<BasisFamily> parse_basis_family(std::string_view name) {
  for (auto f : {BasisFamily::Canonical, BasisFamily::BU, BasisFamily::BV, BasisFamily::BUstar,
                 BasisFamily::BVstar}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string to_string(const BasisSpec& spec) {
  return to_string(spec.family) + "(" + std::to_string(spec.n) + ")";
}

namespace {

bool starred(BasisFamily f) { return f == BasisFamily::BUstar || f == BasisFamily::BVstar; }

void check_domain(const BasisSpec& spec) {
  if (starred(spec.family) && spec.n == 0) {
    throw DomainError(to_string(spec.family) + " is defined for n >= 1");
  }
}

}  // namespace

std::uint32_t ambient_degree(const BasisSpec& spec) {
  check_domain(spec);
  switch (spec.family) {
    case BasisFamily::Canonical: return spec.n;
    case BasisFamily::BU:
    case BasisFamily::BV: return 2 * spec.n;
    case BasisFamily::BUstar:
    case BasisFamily::BVstar: return 2 * spec.n - 1;
  }
  return 0;
}

std::size_t basis_size(const BasisSpec& spec) {
  check_domain(spec);
  switch (spec.family) {
    case BasisFamily::Canonical: return spec.n / 2 + 1;
    case BasisFamily::BU:
    case BasisFamily::BV: return spec.n + 1;
    case BasisFamily::BUstar:
    case BasisFamily::BVstar: return spec.n;
  }
  return 0;
}

std::vector<BasisTerm> basis_terms(const BasisSpec& spec) {
  check_domain(spec);
  const std::uint32_t n = spec.n;
  std::vector<BasisTerm> terms;
  switch (spec.family) {
    case BasisFamily::Canonical:
      throw DomainError("the canonical basis has no sequence form");
    case BasisFamily::BU:
      for (std::uint32_t k = 0; k <= n; ++k) terms.push_back({n - k, SequenceKind::FibonacciU, n + k + 1});
      break;
    case BasisFamily::BV:
      for (std::uint32_t k = 0; k <= n; ++k) terms.push_back({n - k, SequenceKind::LucasV, n + k});
      break;
    case BasisFamily::BUstar:
      for (std::uint32_t k = 0; k < n; ++k) terms.push_back({n - k, SequenceKind::FibonacciU, n + k});
      break;
    case BasisFamily::BVstar:
      for (std::uint32_t k = 0; k < n; ++k) terms.push_back({n - k, SequenceKind::LucasV, n + k - 1});
      break;
  }
  return terms;
}

std::vector<BivarPoly> build_basis(const BasisSpec& spec) {
  check_domain(spec);
  std::vector<BivarPoly> out;
  if (spec.family == BasisFamily::Canonical) {
    for (std::uint32_t k = 0; 2 * k <= spec.n; ++k) out.push_back(BivarPoly::monomial(spec.n - 2 * k, k));
    return out;
  }
  for (const auto& t : basis_terms(spec)) {
    out.push_back(BivarPoly::monomial(t.x_power, 0) * shared_cache(t.kind).at(t.index));
  }
  return out;
}

RationalMatrix coordinate_matrix(const BasisSpec& spec) {
  if (spec.family == BasisFamily::Canonical) {
    throw DomainError("coordinate_matrix needs one of BU, BV, BUstar, BVstar");
  }
  const std::uint32_t degree = ambient_degree(spec);
  std::vector<std::vector<Rational>> columns;
  for (const auto& v : build_basis(spec)) columns.push_back(coordinates_canonical(v, degree));
  return RationalMatrix::from_columns(columns);
}

std::optional<Rational> det_telescoping(const BasisSpec& spec) {
  const RationalMatrix m = coordinate_matrix(spec);
  const std::uint32_t base_n = starred(spec.family) ? 1 : 0;
  if (spec.n == base_n) return det_exact(m);

  // Columns W_0, W_1 - W_0, ..., W_n - W_{n-1}.
  const std::size_t size = m.cols();
  RationalMatrix t = m;
  for (std::size_t c = 1; c < size; ++c) {
    for (std::size_t r = 0; r < size; ++r) t(r, c) = m(r, c) - m(r, c - 1);
  }
  for (std::size_t c = 1; c < size; ++c) {
    if (sgn(t(0, c)) != 0) return std::nullopt;
  }
  RationalMatrix minor(size - 1, size - 1);
  for (std::size_t r = 1; r < size; ++r) {
    for (std::size_t c = 1; c < size; ++c) minor(r - 1, c - 1) = t(r, c);
  }
  const BasisSpec smaller{spec.family, spec.n - 1};
  if (minor != coordinate_matrix(smaller)) return std::nullopt;
  auto rest = det_telescoping(smaller);
  if (!rest) return std::nullopt;
  return Rational(t(0, 0) * *rest);
}

Decomposition decompose(const BivarPoly& target, const BasisSpec& spec) {
  const std::uint32_t degree = ambient_degree(spec);
  const std::vector<Rational> rhs = coordinates_canonical(target, degree);
  if (spec.family == BasisFamily::Canonical) return {target, spec, rhs};

  const RationalMatrix m = coordinate_matrix(spec);
  std::vector<Rational> coords;
  try {
    coords = solve_exact(m, rhs);
  } catch (const SingularMatrix&) {
    throw Error("internal error: basis " + to_string(spec) + " is singular");
  }
  if (m * std::span<const Rational>(coords) != rhs) {
    throw Error("internal error: nonzero residual decomposing over " + to_string(spec));
  }
  return {target, spec, std::move(coords)};
}

BivarPoly recompose(const BasisSpec& spec, const std::vector<Rational>& coords) {
  const auto basis = build_basis(spec);
  if (coords.size() != basis.size()) throw DimensionError("coordinate vector length mismatch");
  BivarPoly sum;
  for (std::size_t k = 0; k < basis.size(); ++k) sum += scale(basis[k], coords[k]);
  return sum;
}

Report check_lemma1(std::size_t n_max) {
  using clock = std::chrono::steady_clock;
  Report report;
  const std::pair<BasisFamily, int> expected[] = {
      {BasisFamily::BU, 1}, {BasisFamily::BUstar, 1}, {BasisFamily::BV, 2}, {BasisFamily::BVstar, 2}};
  for (const auto& [family, value] : expected) {
    const auto t0 = clock::now();
    const std::string fam = to_string(family);
    const std::string range = "1 <= n <= " + std::to_string(n_max);
    IdentityTally bareiss("lemma1.det(" + fam + ",n)=" + std::to_string(value) + " bareiss", range);
    IdentityTally tele("lemma1.det(" + fam + ",n)=" + std::to_string(value) + " telescoping", range);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const BasisSpec spec{family, n};
      const std::string where = "n=" + std::to_string(n);
      bareiss.record(det_exact(coordinate_matrix(spec)) == value, where);
      const auto t = det_telescoping(spec);
      tele.record(t && *t == value, where);
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    report.add(bareiss.finish(secs));
    report.add(tele.finish(0.0));
  }
  return report;
}

std::string to_json(const Decomposition& d) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : d.coords) coords.push_back(c.get_str());
  nlohmann::json doc{{"target", nlohmann::json::parse(to_json(d.target))},
                     {"family", to_string(d.basis.family)},
                     {"n", d.basis.n},
                     {"coords", std::move(coords)}};
  return doc.dump();
}

std::string render_identity(const std::string& lhs, const Decomposition& d) {
  std::string rhs;
  const auto terms = basis_terms(d.basis);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Rational& c = d.coords[k];
    if (sgn(c) == 0) continue;
    if (rhs.empty()) {
      if (sgn(c) < 0) rhs += "-";
    } else {
      rhs += sgn(c) < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string xpart;
    if (terms[k].x_power == 1) xpart = "x";
    if (terms[k].x_power > 1) xpart = "x^" + std::to_string(terms[k].x_power);
    std::string coeff;
    if (mag.get_den() != 1) {
      coeff = "(" + mag.get_str() + ")";
    } else if (mag != 1) {
      coeff = mag.get_str();
    }
    const std::string seq = std::string(1, symbol(terms[k].kind)) + "_" + std::to_string(terms[k].index);
    rhs += coeff + xpart + (xpart.empty() ? "" : " ") + seq;
  }
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs;
}

}  // namespace bifib
