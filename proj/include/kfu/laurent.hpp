#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace kfu {

/// Finitely supported integer Laurent polynomial. Zero coefficients are never
/// stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, std::int64_t> coefficients);
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);

  const std::map<int, std::int64_t>& coefficients() const { return coefficients_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return coefficients_.empty(); }
  int max_degree() const;  // throws std::domain_error on zero
  int min_degree() const;
  bool is_symmetric() const;

  /// t -> t^power.
  LaurentPoly substitute_power(int power) const;
  /// Multiplied by t^k so that the exponents are centred on 0. Throws
  /// std::domain_error when the span is odd.
  LaurentPoly symmetrized() const;

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  std::map<int, std::int64_t> coefficients_;
};

/// Exact quotient of polynomials; throws std::domain_error if a remainder
/// is left.
LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator);

}  // namespace kfu
