#include "kfu/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfu {

namespace {

const Rational kZero(0);
const Rational kTwo(2);

Rational slope_of(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
  return (y1 - y0) / (x1 - x0);
}

}  // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() != values.size())
    throw std::invalid_argument("PLFunction: breakpoint and value counts differ");
  if (breakpoints.size() < 2 || breakpoints.front() != kZero || breakpoints.back() != kTwo)
    throw std::invalid_argument("PLFunction: breakpoints must run from 0 to 2");
  for (std::size_t k = 1; k < breakpoints.size(); ++k) {
    if (!(breakpoints[k - 1] < breakpoints[k]))
      throw std::invalid_argument("PLFunction: breakpoints must be strictly increasing");
    const auto s = slope_of(breakpoints[k - 1], values[k - 1], breakpoints[k], values[k]);
    if (!is_integer(s)) throw std::invalid_argument("PLFunction: slope " + to_string(s) + " is not an integer");
  }
  // Canonical form: drop interior breakpoints where the slope does not change.
  breakpoints_.push_back(breakpoints.front());
  values_.push_back(values.front());
  for (std::size_t k = 1; k + 1 < breakpoints.size(); ++k) {
    const auto before = slope_of(breakpoints_.back(), values_.back(), breakpoints[k], values[k]);
    const auto after = slope_of(breakpoints[k], values[k], breakpoints[k + 1], values[k + 1]);
    if (before != after) {
      breakpoints_.push_back(breakpoints[k]);
      values_.push_back(values[k]);
    }
  }
  breakpoints_.push_back(breakpoints.back());
  values_.push_back(values.back());
}

PLFunction PLFunction::zero() { return PLFunction({kZero, kTwo}, {kZero, kZero}); }

std::vector<std::int64_t> PLFunction::slopes() const {
  std::vector<std::int64_t> out;
  for (const auto& s : segments()) out.push_back(s.slope);
  return out;
}

std::vector<PLFunction::Segment> PLFunction::segments() const {
  std::vector<Segment> out;
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    const auto s = slope_of(breakpoints_[k - 1], values_[k - 1], breakpoints_[k], values_[k]);
    out.push_back({breakpoints_[k - 1], breakpoints_[k], s.numerator()});
  }
  return out;
}

Rational PLFunction::operator()(const Rational& t) const {
  if (t < kZero || t > kTwo) throw std::out_of_range("PLFunction: t=" + to_string(t) + " outside [0,2]");
  auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  auto k = static_cast<std::size_t>(hi - breakpoints_.begin());
  if (breakpoints_[k] == t) return values_[k];
  const auto s = slope_of(breakpoints_[k - 1], values_[k - 1], breakpoints_[k], values_[k]);
  return values_[k - 1] + s * (t - breakpoints_[k - 1]);
}

std::int64_t PLFunction::right_slope(const Rational& t) const {
  if (t < kZero || t >= kTwo) throw std::out_of_range("PLFunction: no right derivative at " + to_string(t));
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return segments()[static_cast<std::size_t>(it - breakpoints_.begin()) - 1].slope;
}

std::int64_t PLFunction::left_slope(const Rational& t) const {
  if (t <= kZero || t > kTwo) throw std::out_of_range("PLFunction: no left derivative at " + to_string(t));
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return segments()[static_cast<std::size_t>(it - breakpoints_.begin()) - 1].slope;
}

PLFunction PLFunction::mirrored() const {
  std::vector<Rational> bp;
  std::vector<Rational> val;
  for (std::size_t k = breakpoints_.size(); k-- > 0;) {
    bp.push_back(kTwo - breakpoints_[k]);
    val.push_back(values_[k]);
  }
  return PLFunction(std::move(bp), std::move(val));
}

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> bp;
  std::set_union(a.breakpoints_.begin(), a.breakpoints_.end(), b.breakpoints_.begin(), b.breakpoints_.end(),
                 std::back_inserter(bp));
  std::vector<Rational> val;
  val.reserve(bp.size());
  for (const auto& t : bp) val.push_back(a(t) + b(t));
  return PLFunction(std::move(bp), std::move(val));
}

PLFunction operator-(const PLFunction& a) {
  auto val = a.values_;
  for (auto& v : val) v = -v;
  return PLFunction(a.breakpoints_, std::move(val));
}

bool check_symmetry(const PLFunction& f) { return f == f.mirrored(); }

}  // namespace kfu
