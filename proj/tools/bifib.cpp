// bifib: command-line front end for the Fibonacci/Lucas polynomial kernel.
//
// Exit codes: 0 success, 1 verification failure or method disagreement,
// 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bifib/bases.hpp"
#include "bifib/coefficients.hpp"
#include "bifib/errors.hpp"
#include "bifib/render.hpp"
#include "bifib/sequences.hpp"
#include "bifib/specializations.hpp"
#include "bifib/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t max_n = 500;

  std::string kind;
  std::uint32_t n = 0;
  std::string format_flag;
  std::string format_pos;
  std::string family;
  std::string method = "closed";
  std::string scope = "all";
  std::string scale = "1";
  bool timing = false;

  std::string format(const std::string& fallback) const {
    if (!format_flag.empty()) return format_flag;
    if (!format_pos.empty()) return format_pos;
    return fallback;
  }

  void guard(std::uint32_t value) const {
    if (value > max_n) {
      throw UsageError("index " + std::to_string(value) + " exceeds --max-n " + std::to_string(max_n));
    }
  }
};

bifib::SequenceKind parse_kind(const std::string& s) {
  if (s == "U") return bifib::SequenceKind::FibonacciU;
  if (s == "V") return bifib::SequenceKind::LucasV;
  throw UsageError("sequence must be U or V, got '" + s + "'");
}

bool want_json(const std::string& format) {
  if (format == "json") return true;
  if (format == "text") return false;
  throw UsageError("format must be text or json, got '" + format + "'");
}

int cmd_gen(const Options& o) {
  o.guard(o.n);
  const auto kind = parse_kind(o.kind);
  const bool json = want_json(o.format("text"));
  const auto& p = bifib::shared_cache(kind).at(o.n);
  std::cout << (json ? bifib::to_json(p) : bifib::to_string(p)) << "\n";
  return kOk;
}

int cmd_chebyshev(const Options& o) {
  o.guard(o.n);
  if (o.kind != "T" && o.kind != "U") throw UsageError("chebyshev kind must be T or U");
  const bool json = want_json(o.format("text"));
  const auto p = o.kind == "T" ? bifib::chebyshev_T(o.n) : bifib::chebyshev_U(o.n);
  std::cout << (json ? bifib::to_json(p) : bifib::to_string(p)) << "\n";
  return kOk;
}

int cmd_table(const Options& o) {
  o.guard(o.n);
  const auto tag = bifib::parse_coeff_tag(o.family);
  if (!tag) throw UsageError("family must be one of a, b, c, d, e");
  const auto format = bifib::parse_table_format(o.format("text"));
  if (!format) throw UsageError("format must be text, csv, json or latex");
  if (o.n < bifib::min_row(*tag)) {
    throw UsageError("family " + o.family + " starts at row " + std::to_string(bifib::min_row(*tag)));
  }

  if (o.method != "all") {
    const auto method = bifib::parse_method(o.method);
    if (!method) throw UsageError("method must be closed, recurrence, oracle or all");
    if (*method == bifib::Method::Oracle && *tag != bifib::CoeffTag::a && o.n == 0) {
      throw UsageError("oracle rows for family " + o.family + " start at n = 1");
    }
    std::cout << bifib::render_table(bifib::make_triangle(*tag, o.n, *method), *format);
    return kOk;
  }

  const bifib::Report report = bifib::cross_check(*tag, o.n, true);
  if (!report.passed()) {
    std::cerr << "methods disagree for family " << o.family << ":\n" << bifib::to_text(report);
    return kFailure;
  }
  std::cout << bifib::render_table(bifib::closed_triangle(*tag, o.n), *format);
  return kOk;
}

int cmd_decompose(const Options& o) {
  o.guard(o.n);
  const auto kind = parse_kind(o.kind);
  const auto family = bifib::parse_basis_family(o.family);
  if (!family) throw UsageError("basis must be one of Canonical, BU, BV, BUstar, BVstar");
  const bool json = want_json(o.format("text"));

  bifib::Rational factor;
  if (factor.set_str(o.scale, 10) != 0 || sgn(factor) == 0) {
    throw UsageError("--scale must be a nonzero rational, got '" + o.scale + "'");
  }
  factor.canonicalize();

  const std::string name = std::string(1, bifib::symbol(kind)) + "_" + std::to_string(o.n);
  if (kind == bifib::SequenceKind::FibonacciU && o.n == 0) throw UsageError("U_0 = 0 has no degree index");
  // U_m lives in E_{m-1}, V_m in E_m.
  const std::uint32_t degree = kind == bifib::SequenceKind::FibonacciU ? o.n - 1 : o.n;

  std::uint32_t order = 0;
  switch (*family) {
    case bifib::BasisFamily::Canonical:
      order = degree;
      break;
    case bifib::BasisFamily::BU:
    case bifib::BasisFamily::BV:
      if (degree % 2 != 0) {
        throw UsageError(name + " lies in E_" + std::to_string(degree) + " (odd); use BUstar or BVstar");
      }
      order = degree / 2;
      break;
    case bifib::BasisFamily::BUstar:
    case bifib::BasisFamily::BVstar:
      if (degree % 2 == 0) {
        throw UsageError(name + " lies in E_" + std::to_string(degree) + " (even); use BU or BV");
      }
      order = (degree + 1) / 2;
      break;
  }

  const bifib::BasisSpec spec{*family, order};
  const auto target = bifib::scale(bifib::shared_cache(kind).at(o.n), factor);
  const auto d = bifib::decompose(target, spec);
  if (json) {
    std::cout << bifib::to_json(d) << "\n";
    return kOk;
  }
  std::string lhs = name;
  if (factor != 1) lhs = (factor.get_den() == 1 ? factor.get_str() : "(" + factor.get_str() + ")") + name;
  if (*family == bifib::BasisFamily::Canonical) {
    std::cout << lhs << " = " << bifib::to_string(target) << "\n";
  } else {
    std::cout << bifib::render_identity(lhs, d) << "\n";
  }
  return kOk;
}

int cmd_det(const Options& o) {
  o.guard(o.n);
  const auto family = bifib::parse_basis_family(o.family);
  if (!family || *family == bifib::BasisFamily::Canonical) {
    throw UsageError("basis must be one of BU, BV, BUstar, BVstar");
  }
  const bifib::BasisSpec spec{*family, o.n};
  if (o.method != "bareiss" && o.method != "telescoping" && o.method != "both") {
    throw UsageError("det method must be bareiss, telescoping or both");
  }
  std::optional<bifib::Rational> bareiss;
  std::optional<bifib::Rational> tele;
  if (o.method != "telescoping") bareiss = bifib::det_exact(bifib::coordinate_matrix(spec));
  if (o.method != "bareiss") {
    tele = bifib::det_telescoping(spec);
    if (!tele) {
      std::cerr << "telescoping reduction did not apply to " << bifib::to_string(spec) << "\n";
      return kFailure;
    }
  }
  if (bareiss && tele && *bareiss != *tele) {
    std::cerr << "determinant paths disagree: bareiss=" << bareiss->get_str() << " telescoping=" << tele->get_str()
              << "\n";
    return kFailure;
  }
  std::cout << (bareiss ? *bareiss : *tele).get_str() << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  o.guard(o.n);
  if (o.n < 1) throw UsageError("verify needs n_max >= 1");
  const auto scope = bifib::parse_scope(o.scope);
  if (!scope) throw UsageError("scope must be all, lemma1, lemma2, relations or theorems");
  const bool json = want_json(o.format("text"));
  const bifib::Report report = bifib::run_verify(o.n, *scope);
  if (json) {
    std::cout << bifib::to_json(report, o.timing) << "\n";
  } else {
    std::cout << bifib::to_text(report);
  }
  return report.passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with bivariate Fibonacci and Lucas polynomials", "bifib"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-n", o.max_n, "Largest index accepted by any command")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Print U_n or V_n");
  gen->add_option("kind", o.kind, "U or V")->required();
  gen->add_option("n", o.n, "Index")->required();
  gen->add_option("output_format", o.format_pos, "text or json");
  gen->add_option("--format", o.format_flag, "text or json");

  auto* table = app.add_subcommand("table", "Print a coefficient triangle");
  table->add_option("family", o.family, "a, b, c, d or e")->required();
  table->add_option("n_max", o.n, "Last row")->required();
  table->add_option("output_format", o.format_pos, "text, csv, json or latex");
  table->add_option("--format", o.format_flag, "text, csv, json or latex");
  table->add_option("--method", o.method, "closed, recurrence, oracle or all")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Coordinates of U_m or V_m over a basis");
  decompose->add_option("kind", o.kind, "U or V")->required();
  decompose->add_option("index", o.n, "Sequence index m")->required();
  decompose->add_option("family", o.family, "Canonical, BU, BV, BUstar or BVstar")->required();
  decompose->add_option("output_format", o.format_pos, "text or json");
  decompose->add_option("--format", o.format_flag, "text or json");
  decompose->add_option("--scale", o.scale, "Decompose scale * W_m instead of W_m")->capture_default_str();

  auto* det = app.add_subcommand("det", "Determinant of a basis over the canonical basis");
  det->add_option("family", o.family, "BU, BV, BUstar or BVstar")->required();
  det->add_option("n", o.n, "Order")->required();
  det->add_option("--method", o.method, "bareiss, telescoping or both");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("n_max", o.n, "Largest index checked")->required();
  verify->add_option("scope", o.scope, "all, lemma1, lemma2, relations or theorems")->capture_default_str();
  verify->add_option("--format", o.format_flag, "text or json");
  verify->add_flag("--timing", o.timing, "Include non-golden timing fields in JSON output");

  auto* cheb = app.add_subcommand("chebyshev", "Chebyshev T_n or U_n via substitution");
  cheb->add_option("kind", o.kind, "T or U")->required();
  cheb->add_option("n", o.n, "Index")->required();
  cheb->add_option("output_format", o.format_pos, "text or json");
  cheb->add_option("--format", o.format_flag, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*table) return cmd_table(o);
    if (*decompose) return cmd_decompose(o);
    if (*det) {
      if (o.method == "closed") o.method = "bareiss";
      return cmd_det(o);
    }
    if (*verify) return cmd_verify(o);
    if (*cheb) return cmd_chebyshev(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bifib::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bifib::IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bifib::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
