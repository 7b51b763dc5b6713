#include "kfu/laurent.hpp"

#include <stdexcept>

namespace kfu {

LaurentPoly::LaurentPoly(std::map<int, std::int64_t> coefficients) {
  for (const auto& [e, c] : coefficients)
    if (c != 0) coefficients_.emplace(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  return LaurentPoly({{exponent, coefficient}});
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? 0 : it->second;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return coefficients_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return coefficients_.begin()->first;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coefficients_)
    if (coefficient(-e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::substitute_power(int power) const {
  std::map<int, std::int64_t> out;
  for (const auto& [e, c] : coefficients_) out[e * power] += c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::symmetrized() const {
  if (is_zero()) return *this;
  const int span = max_degree() + min_degree();
  if (span % 2 != 0) throw std::domain_error("polynomial has odd degree span, cannot centre it");
  std::map<int, std::int64_t> out;
  for (const auto& [e, c] : coefficients_) out[e - span / 2] = c;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, std::int64_t> out;
  for (const auto& [ea, ca] : a.coefficients_)
    for (const auto& [eb, cb] : b.coefficients_) out[ea + eb] += ca * cb;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  auto out = a.coefficients_;
  for (const auto& [e, c] : b.coefficients_) out[e] += c;
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto [e, c] = *it;
    out += (c < 0) ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) out += (e == 1) ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (numerator.is_zero()) return numerator;
  const int lead_exp = denominator.max_degree();
  const auto lead = denominator.coefficient(lead_exp);
  // Quotient exponents cannot drop below this.
  const int lowest = numerator.min_degree() - denominator.min_degree();
  auto remainder = numerator;
  std::map<int, std::int64_t> quotient;
  while (!remainder.is_zero() && remainder.max_degree() - lead_exp >= lowest) {
    const int e = remainder.max_degree() - lead_exp;
    const auto c = remainder.coefficient(remainder.max_degree());
    if (c % lead != 0) throw std::domain_error("inexact polynomial division");
    quotient[e] += c / lead;
    remainder = remainder + LaurentPoly::monomial(e, -c / lead) * denominator;
  }
  if (!remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return LaurentPoly(std::move(quotient));
}

}  // namespace kfu
