#include "bifib/poly.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "bifib/errors.hpp"

namespace bifib {

BivarPoly::BivarPoly(long c) : BivarPoly(Rational(c)) {}

BivarPoly::BivarPoly(const Integer& c) : BivarPoly(Rational(c)) {}

BivarPoly::BivarPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

BivarPoly BivarPoly::monomial(std::uint32_t x_exp, std::uint32_t y_exp, const Rational& coeff) {
  BivarPoly p;
  if (sgn(coeff) != 0) p.terms_.emplace(Monomial{x_exp, y_exp}, coeff);
  return p;
}

bool BivarPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

Rational BivarPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

HomogeneityProfile BivarPoly::homogeneity() const {
  if (terms_.empty()) return {};
  const std::uint32_t w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_) {
    if (m.weight() != w) return {};
  }
  return {w};
}

std::uint32_t BivarPoly::x_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_exp);
  return d;
}

std::uint32_t BivarPoly::y_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y_exp);
  return d;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& y) const {
  // Powers are cached per exponent; the polynomials here have few distinct ones.
  std::map<std::uint32_t, Rational> xp, yp;
  auto power = [](std::map<std::uint32_t, Rational>& cache, const Rational& base, std::uint32_t e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Rational r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    cache.emplace(e, r);
    return r;
  };
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += c * power(xp, x, m.x_exp) * power(yp, y, m.y_exp);
  }
  return sum;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& other) {
  *this = *this * other;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, ca * cb);
    }
  }
  return r;
}

BivarPoly add(const BivarPoly& p, const BivarPoly& q) { return p + q; }

BivarPoly mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }

BivarPoly scale(const BivarPoly& p, const Rational& c) {
  if (sgn(c) == 0) return {};
  BivarPoly r;
  for (const auto& [m, coeff] : p.terms()) r += BivarPoly::monomial(m.x_exp, m.y_exp, coeff * c);
  return r;
}

BivarPoly pow(const BivarPoly& p, unsigned e) {
  BivarPoly result = 1;
  BivarPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BivarPoly substitute(const BivarPoly& p, const BivarPoly& x_image, const BivarPoly& y_image) {
  std::vector<BivarPoly> xp{BivarPoly(1)};
  std::vector<BivarPoly> yp{BivarPoly(1)};
  auto power = [](std::vector<BivarPoly>& cache, const BivarPoly& base, std::uint32_t e) -> const BivarPoly& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  BivarPoly r;
  for (const auto& [m, c] : p.terms()) {
    r += scale(power(xp, x_image, m.x_exp) * power(yp, y_image, m.y_exp), c);
  }
  return r;
}

std::vector<Rational> coordinates_canonical(const BivarPoly& p, std::uint32_t n) {
  std::vector<Rational> coords(n / 2 + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() != n || m.y_exp > n / 2) {
      std::ostringstream msg;
      msg << "monomial x^" << m.x_exp << " y^" << m.y_exp << " is not in C_" << n;
      throw MalformedElement(msg.str());
    }
    coords[m.y_exp] = c;
  }
  return coords;
}

BivarPoly from_canonical(const std::vector<Rational>& v, std::uint32_t n) {
  BivarPoly p;
  for (std::uint32_t k = 0; k < v.size(); ++k) {
    p += BivarPoly::monomial(n - 2 * k, k, v[k]);
  }
  return p;
}

namespace {

// Display order: descending x exponent, ties by descending y exponent.
std::vector<std::pair<Monomial, Rational>> display_terms(const BivarPoly& p) {
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.x_exp != b.first.x_exp) return a.first.x_exp > b.first.x_exp;
    return a.first.y_exp > b.first.y_exp;
  });
  return terms;
}

void append_power(std::string& out, char var, std::uint32_t e) {
  if (e == 0) return;
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_terms(p)) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational mag = abs(c);
    std::string mono;
    append_power(mono, 'x', m.x_exp);
    append_power(mono, 'y', m.y_exp);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else if (mag.get_den() == 1) {
      out += mag.get_str() + mono;
    } else {
      out += "(" + mag.get_str() + ")" + mono;
    }
  }
  return out;
}

std::string to_json(const BivarPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : display_terms(p)) {
    terms.push_back({{"x", m.x_exp}, {"y", m.y_exp}, {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return terms.dump();
}

BivarPoly poly_from_json(const std::string& text) {
  BivarPoly p;
  try {
    const auto terms = nlohmann::json::parse(text);
    if (!terms.is_array()) throw MalformedElement("polynomial JSON must be a list of terms");
    for (const auto& t : terms) {
      Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
      if (c.get_den() == 0) throw MalformedElement("zero denominator in polynomial JSON");
      c.canonicalize();
      p += BivarPoly::monomial(t.at("x").get<std::uint32_t>(), t.at("y").get<std::uint32_t>(), c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedElement(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedElement(std::string("bad integer in polynomial JSON: ") + e.what());
  }
  return p;
}

}  // namespace bifib
