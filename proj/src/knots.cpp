#include "kfu/knots.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kfu/errors.hpp"
#include "kfu/upsilon.hpp"

namespace kfu {

BifilteredComplex unknot_complex() {
  BifilteredComplex c;
  c.generators = {{"x", 0, 0}};
  c.label = "unknot";
  return c;
}

BifilteredComplex staircase(std::span<const int> steps) {
  if (steps.empty() || steps.size() % 2 != 0)
    throw DomainError("staircase needs a nonempty, even-length step list");
  if (std::any_of(steps.begin(), steps.end(), [](int s) { return s <= 0; }))
    throw DomainError("staircase steps must be positive");
  if (!std::equal(steps.begin(), steps.end(), steps.rbegin()))
    throw DomainError("staircase steps must be palindromic");

  int top = 0;
  for (std::size_t k = 0; k < steps.size(); k += 2) top += steps[k];

  BifilteredComplex c;
  c.generators.push_back({"x0", top, 0});
  for (std::size_t k = 0; k < steps.size() / 2; ++k) {
    const int h = steps[2 * k];
    const int v = steps[2 * k + 1];
    const auto& prev = c.generators.back();
    const std::string y = "y" + std::to_string(k + 1);
    const std::string x = "x" + std::to_string(k + 1);
    const std::string prev_name = prev.name;
    // y -> U^h prev is purely horizontal, y -> x purely vertical.
    const Generator gy{y, prev.alexander - h, prev.maslov + 1 - 2 * h};
    const Generator gx{x, gy.alexander - v, gy.maslov - 1};
    c.generators.push_back(gy);
    c.generators.push_back(gx);
    c.differential.push_back({y, prev_name, h});
    c.differential.push_back({y, x, 0});
  }
  std::string label = "staircase:";
  for (std::size_t k = 0; k < steps.size(); ++k) label += (k ? "," : "") + std::to_string(steps[k]);
  c.label = label;
  return c;
}

std::vector<int> staircase_steps(const LaurentPoly& delta) {
  std::vector<int> exponents;
  std::int64_t expected = 1;
  const auto& coeffs = delta.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->second != expected)
      throw DomainError("Alexander polynomial " + delta.to_string() + " does not have a staircase shape");
    exponents.push_back(it->first);
    expected = -expected;
  }
  if (exponents.empty() || expected != -1)
    throw DomainError("Alexander polynomial " + delta.to_string() + " does not have a staircase shape");
  std::vector<int> steps;
  for (std::size_t k = 1; k < exponents.size(); ++k) steps.push_back(exponents[k - 1] - exponents[k]);
  return steps;
}

namespace {

void require_torus_parameters(int p, int q) {
  if (p < 1 || q == 0) throw DomainError("torus knot parameters must satisfy p >= 1, q != 0");
  if (std::gcd(p, q) != 1)
    throw DomainError("torus knot parameters " + std::to_string(p) + "," + std::to_string(q) + " are not coprime");
}

LaurentPoly binomial_minus_one(int exponent) {
  return LaurentPoly::monomial(exponent) + LaurentPoly::monomial(0, -1);
}

}  // namespace

LaurentPoly torus_knot_alexander(int p, int q) {
  require_torus_parameters(p, q);
  q = std::abs(q);
  const auto numerator = binomial_minus_one(p * q) * binomial_minus_one(1);
  const auto denominator = binomial_minus_one(p) * binomial_minus_one(q);
  return divide_exact(numerator, denominator).symmetrized();
}

BifilteredComplex torus_knot_complex(int p, int q) {
  if (p < 2 || std::abs(q) < 2) throw DomainError("torus knot complex needs p >= 2 and |q| >= 2");
  require_torus_parameters(p, q);
  if (q < 0) {
    auto mirror = dual(torus_knot_complex(p, -q));
    mirror.label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return mirror;
  }
  const auto steps = staircase_steps(torus_knot_alexander(p, q));
  auto c = staircase(steps);
  c.label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return c;
}

BifilteredComplex box_complex(int side, int alexander, int maslov, std::string_view prefix) {
  if (side <= 0) throw DomainError("box side must be positive");
  const std::string pre(prefix);
  BifilteredComplex c;
  c.generators = {
      {pre + "a", alexander, maslov},
      {pre + "b", alexander - side, maslov - 1},
      {pre + "c", alexander + side, maslov - 1 + 2 * side},
      {pre + "d", alexander, maslov - 2 + 2 * side},
  };
  c.differential = {
      {pre + "a", pre + "b", 0},
      {pre + "a", pre + "c", side},
      {pre + "b", pre + "d", side},
      {pre + "c", pre + "d", 0},
  };
  return c;
}

BifilteredComplex figure_eight_complex() {
  auto c = direct_sum(unknot_complex(), box_complex(1, 0, 0, ""));
  c.generators.front().name = "e";
  c.label = "figure8";
  return c;
}

LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q) {
  if (p < 1) throw DomainError("cable parameter p must be at least 1");
  return (delta.substitute_power(p) * torus_knot_alexander(p, q)).symmetrized();
}

int fibered_genus(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("fibered_genus of the zero polynomial");
  return delta.max_degree();
}

PLFunction chen_cable_upsilon(int n) {
  if (n < 8) throw DomainError("the cable formula holds for n >= 8, got " + std::to_string(n));
  const Rational two_thirds(2, 3);
  const Rational at_two_thirds = -Rational(n - 1) * two_thirds;
  const Rational at_one(2 - (n + 2));
  return PLFunction({Rational(0), two_thirds, Rational(1), Rational(4, 3), Rational(2)},
                    {Rational(0), at_two_thirds, at_one, at_two_thirds, Rational(0)});
}

void validate_record(const KnotRecord& r) {
  if (r.genus && *r.genus < 0) throw DomainError("knot '" + r.name + "' has negative genus");
  if (r.genus && r.complex && *r.genus != r.complex->max_alexander())
    throw DomainError("knot '" + r.name + "': genus " + std::to_string(*r.genus) +
                      " differs from top Alexander grading " + std::to_string(r.complex->max_alexander()));
}

PLFunction record_upsilon(const KnotRecord& r) {
  if (r.upsilon_override) return *r.upsilon_override;
  if (r.complex) return upsilon(*r.complex);
  throw DomainError("knot '" + r.name + "' carries neither a complex nor an upsilon function");
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError("malformed builtin knot name '" + std::string(whole) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

KnotRecord complex_record(std::string name, BifilteredComplex c, std::optional<bool> fibered, Monodromy m) {
  KnotRecord r;
  r.name = std::move(name);
  r.genus = c.max_alexander();
  r.complex = std::move(c);
  r.fibered = fibered;
  r.monodromy_right_veering = m;
  return r;
}

}  // namespace

std::optional<KnotRecord> builtin_knot(std::string_view name) {
  const std::string n(name);
  if (name == "unknot") return complex_record(n, unknot_complex(), true, Monodromy::unknown);
  if (name == "trefoil") return complex_record(n, torus_knot_complex(2, 3), true, Monodromy::right_veering);
  if (name == "trefoil-left")
    return complex_record(n, torus_knot_complex(2, -3), true, Monodromy::not_right_veering);
  if (name == "figure8") return complex_record(n, figure_eight_complex(), true, Monodromy::unknown);

  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = name.substr(0, colon);
  const auto args = name.substr(colon + 1);

  if (kind == "torus") {
    const auto pq = parse_int_list(args, name);
    if (pq.size() != 2) throw ParseError("torus knot name needs two parameters: '" + n + "'");
    return complex_record(n, torus_knot_complex(pq[0], pq[1]), true,
                          pq[1] > 0 ? Monodromy::right_veering : Monodromy::not_right_veering);
  }
  if (kind == "staircase") {
    const auto steps = parse_int_list(args, name);
    return complex_record(n, staircase(steps), std::nullopt, Monodromy::unknown);
  }
  if (kind == "chen-cable") {
    const auto params = parse_int_list(args, name);
    if (params.size() != 1) throw ParseError("chen-cable needs one parameter: '" + n + "'");
    KnotRecord r;
    r.name = n;
    r.genus = params[0] + 2;
    r.fibered = true;
    r.upsilon_override = chen_cable_upsilon(params[0]);
    return r;
  }
  return std::nullopt;
}

}  // namespace kfu
