// SPDX-License-Identifier: Apache-2.0
#include "subadd/eps_polynomial.hpp"

#include <stdexcept>
#include <string>

namespace subadd {

namespace {

void accumulate(std::map<EpsPolynomial::Degree, Rational>& into, EpsPolynomial::Degree d, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

EpsPolynomial::EpsPolynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

EpsPolynomial::EpsPolynomial(std::map<Degree, Rational> coefficients) : coeffs_(std::move(coefficients)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

EpsPolynomial EpsPolynomial::monomial(const Rational& c, Degree degree) {
  EpsPolynomial p;
  if (!c.is_zero()) p.coeffs_.emplace(degree, c);
  return p;
}

EpsPolynomial::Degree EpsPolynomial::valuation() const {
  return coeffs_.empty() ? kInfiniteValuation : coeffs_.begin()->first;
}

EpsPolynomial::Degree EpsPolynomial::degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Rational EpsPolynomial::coefficient(Degree d) const {
  const auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational EpsPolynomial::evaluate(const Rational& at) const {
  // Horner over the sparse representation, highest degree first.
  Rational acc(0);
  Degree current = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    while (current > it->first) {
      acc *= at;
      --current;
    }
    acc += it->second;
  }
  while (current > 0) {
    acc *= at;
    --current;
  }
  return acc;
}

EpsPolynomial EpsPolynomial::shift_down(Degree d) const {
  if (is_zero() || d == 0) return *this;
  if (valuation() < d) {
    throw std::domain_error("shift_down: valuation " + std::to_string(valuation()) + " is below shift " +
                            std::to_string(d));
  }
  EpsPolynomial out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), deg - d, c);
  return out;
}

EpsPolynomial EpsPolynomial::shift_up(Degree d) const {
  if (d == 0) return *this;
  EpsPolynomial out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), deg + d, c);
  return out;
}

EpsPolynomial EpsPolynomial::divide_exact(const EpsPolynomial& q) const {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (is_zero()) return {};
  const Degree qdeg = q.degree();
  const Rational& qlead = q.coeffs_.rbegin()->second;
  std::map<Degree, Rational> rem = coeffs_;
  std::map<Degree, Rational> quot;
  while (!rem.empty() && rem.rbegin()->first >= qdeg) {
    const Degree shift = rem.rbegin()->first - qdeg;
    const Rational factor = rem.rbegin()->second / qlead;
    quot.emplace(shift, factor);
    for (const auto& [deg, c] : q.coeffs_) accumulate(rem, deg + shift, -(factor * c));
  }
  if (!rem.empty()) throw std::domain_error("divide_exact: divisor does not divide dividend");
  return EpsPolynomial(std::move(quot));
}

EpsPolynomial& EpsPolynomial::operator+=(const EpsPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) accumulate(coeffs_, deg, c);
  return *this;
}

EpsPolynomial& EpsPolynomial::operator-=(const EpsPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) accumulate(coeffs_, deg, -c);
  return *this;
}

EpsPolynomial& EpsPolynomial::operator*=(const EpsPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

EpsPolynomial& EpsPolynomial::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [deg, c] : coeffs_) c *= rhs;
  return *this;
}

void EpsPolynomial::add_product(const EpsPolynomial& a, const EpsPolynomial& b) {
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) accumulate(coeffs_, da + db, ca * cb);
  }
}

EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b) {
  EpsPolynomial out;
  out.add_product(a, b);
  return out;
}

EpsPolynomial EpsPolynomial::operator-() const {
  EpsPolynomial out = *this;
  for (auto& [deg, c] : out.coeffs_) c = -c;
  return out;
}

std::string EpsPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (deg == 1) {
      out += "*e";
    } else if (deg > 1) {
      out += "*e^" + std::to_string(deg);
    }
  }
  return out;
}

EpsPolynomial EpsPolynomial::parse(std::string_view text) {
  const std::string body = trim(text);
  if (body.empty()) throw std::invalid_argument("EpsPolynomial: empty text");
  std::map<Degree, Rational> coeffs;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t sep = body.find(" + ", start);
    const std::string term = trim(std::string_view(body).substr(start, sep == std::string::npos ? std::string::npos : sep - start));
    if (term.empty()) throw std::invalid_argument("EpsPolynomial: empty term in '" + body + "'");
    Degree deg = 0;
    std::string coeff_text = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff_text = term.substr(0, star);
      const std::string var = term.substr(star + 1);
      if (var == "e") {
        deg = 1;
      } else if (var.size() > 2 && var.compare(0, 2, "e^") == 0) {
        const std::string digits = var.substr(2);
        if (digits.find_first_not_of("0123456789") != std::string::npos) {
          throw std::invalid_argument("EpsPolynomial: bad exponent in '" + term + "'");
        }
        deg = std::stoul(digits);
      } else {
        throw std::invalid_argument("EpsPolynomial: bad monomial '" + term + "'");
      }
    }
    accumulate(coeffs, deg, Rational::parse(coeff_text));
    if (sep == std::string::npos) break;
    start = sep + 3;
  }
  return EpsPolynomial(std::move(coeffs));
}

EpsPolynomial poly_arith(const EpsPolynomial& a, const EpsPolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::kAdd:
      return a + b;
    case PolyOp::kSub:
      return a - b;
    case PolyOp::kMul:
      return a * b;
  }
  throw std::invalid_argument("poly_arith: unknown operation");
}

}  // namespace subadd
