#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bifib/bases.hpp"
#include "bifib/coefficients.hpp"
#include "bifib/errors.hpp"
#include "bifib/sequences.hpp"
#include "bifib/specializations.hpp"
#include "bifib/verify.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as "p/q" or "p" strings; the Python side turns
// them into Fraction or int.
bifib::Rational rational(const std::string& s) {
  bifib::Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bifib::MalformedElement("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

bifib::SequenceKind kind(const std::string& s) {
  if (s == "U") return bifib::SequenceKind::FibonacciU;
  if (s == "V") return bifib::SequenceKind::LucasV;
  throw bifib::DomainError("sequence must be U or V");
}

template <class T, class F>
T parse_or_throw(F&& parse, const std::string& s, const char* what) {
  auto v = parse(s);
  if (!v) throw bifib::DomainError(std::string("unknown ") + what + " '" + s + "'");
  return *v;
}

std::vector<std::string> strings(const std::vector<bifib::Rational>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_bifib, m) {
  auto base = py::register_exception<bifib::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<bifib::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<bifib::IndexError>(m, "IndexError", base.ptr());
  py::register_exception<bifib::MalformedElement>(m, "MalformedElement", base.ptr());
  py::register_exception<bifib::IntegralityViolation>(m, "IntegralityViolation", base.ptr());

  py::class_<bifib::BivarPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init([](long c) { return bifib::BivarPoly(c); }))
      .def_static("monomial", [](std::uint32_t x, std::uint32_t y, const std::string& c) {
        return bifib::BivarPoly::monomial(x, y, rational(c));
      })
      .def("terms", [](const bifib::BivarPoly& p) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, std::string>> out;
        for (const auto& [mono, c] : p.terms()) out.emplace_back(mono.x_exp, mono.y_exp, c.get_str());
        return out;
      })
      .def("weight", [](const bifib::BivarPoly& p) { return p.homogeneity().weight; })
      .def("evaluate", [](const bifib::BivarPoly& p, const std::string& x, const std::string& y) {
        return p.evaluate(rational(x), rational(y)).get_str();
      })
      .def("to_json", [](const bifib::BivarPoly& p) { return bifib::to_json(p); })
      .def_static("from_json", &bifib::poly_from_json)
      .def("is_zero", &bifib::BivarPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const bifib::BivarPoly& p) { return bifib::to_string(p); })
      .def("__repr__", [](const bifib::BivarPoly& p) { return "Poly(" + bifib::to_string(p) + ")"; });

  m.def("gen", [](const std::string& k, std::size_t n) { return bifib::shared_cache(kind(k)).at(n); },
        py::arg("kind"), py::arg("n"));
  m.def("chebyshev", [](const std::string& k, std::size_t n) {
    if (k == "T") return bifib::chebyshev_T(n);
    if (k == "U") return bifib::chebyshev_U(n);
    throw bifib::DomainError("chebyshev kind must be T or U");
  });

  m.def("table_rows", [](const std::string& family, std::uint32_t n_max, const std::string& method) {
    const auto tag = parse_or_throw<bifib::CoeffTag>(bifib::parse_coeff_tag, family, "family");
    const auto meth = parse_or_throw<bifib::Method>(bifib::parse_method, method, "method");
    const auto t = bifib::make_triangle(tag, n_max, meth);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : t.rows) {
      auto& out = rows.emplace_back();
      for (const auto& v : row) out.push_back(v.get_str());
    }
    return py::make_tuple(t.first_row, rows);
  });

  m.def("decompose", [](const bifib::BivarPoly& target, const std::string& family, std::uint32_t n) {
    const auto f = parse_or_throw<bifib::BasisFamily>(bifib::parse_basis_family, family, "basis");
    return strings(bifib::decompose(target, {f, n}).coords);
  });
  m.def("recompose", [](const std::string& family, std::uint32_t n, const std::vector<std::string>& coords) {
    const auto f = parse_or_throw<bifib::BasisFamily>(bifib::parse_basis_family, family, "basis");
    std::vector<bifib::Rational> v;
    for (const auto& c : coords) v.push_back(rational(c));
    return bifib::recompose({f, n}, v);
  });
  m.def("det", [](const std::string& family, std::uint32_t n) {
    const auto f = parse_or_throw<bifib::BasisFamily>(bifib::parse_basis_family, family, "basis");
    return bifib::det_exact(bifib::coordinate_matrix({f, n})).get_str();
  });

  m.def("verify_json", [](std::uint32_t n_max, const std::string& scope) {
    const auto s = parse_or_throw<bifib::VerifyScope>(bifib::parse_scope, scope, "scope");
    bifib::Report report;
    {
      py::gil_scoped_release release;
      report = bifib::run_verify(n_max, s);
    }
    return bifib::to_json(report, false);
  });
}
