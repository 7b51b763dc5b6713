#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kfu/rational.hpp"

namespace kfu {

/// Continuous piecewise-linear function on [0,2] with rational breakpoints
/// and integer slopes. Stored in canonical form: collinear neighbouring
/// segments are merged, so two equal functions compare equal structurally.
class PLFunction {
 public:
  struct Segment {
    Rational lo;
    Rational hi;
    std::int64_t slope = 0;
  };

  /// Breakpoints strictly increasing from 0 to 2; one value per breakpoint.
  /// Throws std::invalid_argument on a malformed domain or a non-integer slope.
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PLFunction zero();

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::vector<std::int64_t> slopes() const;
  std::vector<Segment> segments() const;

  /// Throws std::out_of_range outside [0,2].
  Rational operator()(const Rational& t) const;

  /// One-sided derivatives; at 0 and 2 only the inward side exists.
  std::int64_t right_slope(const Rational& t) const;
  std::int64_t left_slope(const Rational& t) const;

  /// t -> f(2 - t).
  PLFunction mirrored() const;

  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
  friend PLFunction operator-(const PLFunction& a);
  friend bool operator==(const PLFunction& a, const PLFunction& b) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// f(t) = f(2 - t) identically.
bool check_symmetry(const PLFunction& f);

}  // namespace kfu
