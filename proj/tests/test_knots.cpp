#include <doctest.h>

#include <set>

#include "kfu/errors.hpp"
#include "kfu/knots.hpp"
#include "kfu/upsilon.hpp"

using namespace kfu;

namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Independent oracle: Delta_{T(p,q)}(t) = (1 - t) * sum_{s in <p,q>} t^s,
// truncated at the conductor 2g, then centred.
LaurentPoly semigroup_alexander(int p, int q) {
  const int two_g = (p - 1) * (q - 1);
  std::set<int> semigroup;
  for (int a = 0; a * p <= two_g; ++a)
    for (int b = 0; a * p + b * q <= two_g; ++b) semigroup.insert(a * p + b * q);
  std::map<int, std::int64_t> coeffs;
  for (int s : semigroup) {
    coeffs[s] += 1;
    if (s + 1 <= two_g) coeffs[s + 1] -= 1;
  }
  // The tail of the geometric series contributes only t^{2g}.
  if (!semigroup.contains(two_g - 1) && two_g > 0) coeffs[two_g] += 0;
  std::map<int, std::int64_t> centred;
  for (const auto& [e, c] : coeffs) centred[e - two_g / 2] = c;
  return LaurentPoly(centred);
}

// Upsilon slope near 0 read off the brute-force oracle: nu_t = (t/2) tau for
// small t.
Rational tau_by_oracle(const BifilteredComplex& c) { return brute_force_nu(c, r(1, 100)) * 200; }

}  // namespace

TEST_CASE("staircase") {
  SUBCASE("[1,1] is the trefoil") {
    const auto c = staircase(std::vector<int>{1, 1});
    CHECK(c.generators.size() == 3);
    CHECK(c.generators[0].alexander == 1);
    CHECK(c.generators[1].alexander == 0);
    CHECK(c.generators[2].alexander == -1);
    CHECK(validate(c).passed());
    CHECK(upsilon(c) == PLFunction({r(0), r(1), r(2)}, {r(0), r(-1), r(0)}));
  }
  SUBCASE("[1,1,1,1] is T(2,5)") {
    const auto c = staircase(std::vector<int>{1, 1, 1, 1});
    CHECK(c.generators.size() == 5);
    CHECK(c.max_alexander() == 2);
    CHECK(validate(c).passed());
    CHECK(tau_by_oracle(c) == r(2));
    CHECK(tau(c) == 2);
  }
  SUBCASE("T(3,4) from its Alexander gaps") {
    const auto steps = staircase_steps(torus_knot_alexander(3, 4));
    CHECK(steps == std::vector<int>{1, 2, 2, 1});
    const auto c = staircase(steps);
    CHECK(c.max_alexander() == 3);
    CHECK(tau_by_oracle(c) == r(3));
    CHECK(tau(c) == 3);
  }
  SUBCASE("invalid step data") {
    CHECK_THROWS_AS(staircase(std::vector<int>{}), DomainError);
    CHECK_THROWS_AS(staircase(std::vector<int>{1}), DomainError);
    CHECK_THROWS_AS(staircase(std::vector<int>{1, 0}), DomainError);
    CHECK_THROWS_AS(staircase(std::vector<int>{1, 2}), DomainError);
  }
  SUBCASE("top grading is the sum of horizontal steps") {
    for (const auto& steps : std::vector<std::vector<int>>{{2, 2}, {1, 3, 3, 1}, {2, 1, 1, 2}, {1, 1, 2, 2, 1, 1}}) {
      const auto c = staircase(steps);
      int horizontal = 0;
      for (std::size_t k = 0; k < steps.size(); k += 2) horizontal += steps[k];
      CHECK(c.max_alexander() == horizontal);
      CHECK(validate(c).passed());
    }
  }
}

TEST_CASE("torus_knot_alexander") {
  CHECK(torus_knot_alexander(2, 3) == LaurentPoly({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(torus_knot_alexander(2, 5) == LaurentPoly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
  CHECK(torus_knot_alexander(2, -3) == torus_knot_alexander(2, 3));
  CHECK_THROWS_AS(torus_knot_alexander(2, 4), DomainError);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 9}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {5, 6}, {4, 7}}) {
    CAPTURE(p);
    CAPTURE(q);
    const auto delta = torus_knot_alexander(p, q);
    CHECK(delta == semigroup_alexander(p, q));
    CHECK(delta.is_symmetric());
    CHECK(fibered_genus(delta) == (p - 1) * (q - 1) / 2);
  }
}

TEST_CASE("torus_knot_complex") {
  const auto t23 = torus_knot_complex(2, 3);
  CHECK(t23.generators == staircase(std::vector<int>{1, 1}).generators);
  CHECK(t23.max_alexander() == 1);
  const auto t27 = torus_knot_complex(2, 7);
  CHECK(t27.max_alexander() == 3);
  CHECK(tau_by_oracle(t27) == r(3));
  const auto t37 = torus_knot_complex(3, 7);
  CHECK(t37.max_alexander() == 6);
  std::set<std::int64_t> slopes;
  for (const auto& s : upsilon(t37).segments())
    if (s.lo < r(1)) slopes.insert(s.slope);
  CHECK(slopes.size() >= 2);
  CHECK_THROWS_AS(torus_knot_complex(2, 4), DomainError);
  CHECK_THROWS_AS(torus_knot_complex(1, 3), DomainError);
  CHECK(upsilon(torus_knot_complex(2, -3)) == -upsilon(t23));
}

TEST_CASE("figure_eight_complex") {
  const auto f = figure_eight_complex();
  CHECK(f.generators.size() == 5);
  CHECK(validate(f).passed());
  for (int k = 0; k <= 8; ++k) CHECK(brute_force_nu(f, Rational(k, 4)) == r(0));
  CHECK(upsilon(f) == PLFunction::zero());
  CHECK(tau(f) == 0);
  CHECK(upsilon(dual(f)) == upsilon(f));
}

TEST_CASE("box_complex is acyclic") {
  for (int side : {1, 2, 3}) {
    const auto b = box_complex(side, 1, 0, "q");
    CHECK(validate_structure(b).passed());
    CHECK(verify_homology(b).homology_dimension == 0);
  }
}

TEST_CASE("cable_alexander and fibered_genus") {
  CHECK(cable_alexander(LaurentPoly::monomial(0), 2, 3) == torus_knot_alexander(2, 3));
  const auto left_trefoil = torus_knot_alexander(2, -3);
  for (int n = 8; n <= 12; ++n) {
    const auto delta = cable_alexander(left_trefoil, 2, 2 * n + 1);
    CHECK(delta.is_symmetric());
    CHECK(fibered_genus(delta) == n + 2);
  }
  CHECK(fibered_genus(torus_knot_alexander(2, 3)) == 1);
  CHECK(fibered_genus(LaurentPoly::monomial(0)) == 0);
  CHECK_THROWS_AS(fibered_genus(LaurentPoly{}), DomainError);
}

TEST_CASE("chen_cable_upsilon") {
  const auto f = chen_cable_upsilon(8);
  CHECK(f(r(2, 3)) == r(-14, 3));
  CHECK(f(r(1)) == r(-8));
  CHECK(f(r(0)) == r(0));
  CHECK(check_symmetry(f));
  for (int n = 8; n <= 20; ++n) {
    const auto g = chen_cable_upsilon(n);
    CHECK(g.right_slope(r(0)) == -(n - 1));
    CHECK(g.right_slope(r(2, 3)) == -(n + 2));
    CHECK(g(r(2, 3)) == r(2) - r(2, 3) * (n + 2));
  }
  CHECK_THROWS_AS(chen_cable_upsilon(7), DomainError);
}

TEST_CASE("builtin knots") {
  CHECK(builtin_knot("trefoil")->genus == 1);
  CHECK(builtin_knot("trefoil-left")->monodromy_right_veering == Monodromy::not_right_veering);
  CHECK(builtin_knot("figure8")->complex->generators.size() == 5);
  CHECK(builtin_knot("torus:3,4")->genus == 3);
  CHECK(builtin_knot("torus:2,-5")->complex->max_alexander() == 2);
  CHECK(builtin_knot("staircase:1,2,2,1")->complex->max_alexander() == 3);
  const auto chen = builtin_knot("chen-cable:8");
  CHECK(chen->genus == 10);
  CHECK_FALSE(chen->complex);
  CHECK(record_upsilon(*chen) == chen_cable_upsilon(8));
  CHECK_FALSE(builtin_knot("no-such-knot"));
  CHECK_THROWS_AS(builtin_knot("torus:2"), ParseError);
  CHECK_THROWS_AS(builtin_knot("torus:2,x"), ParseError);
}

TEST_CASE("knot records") {
  KnotRecord r0;
  r0.name = "bad";
  r0.complex = torus_knot_complex(2, 3);
  r0.genus = 2;
  CHECK_THROWS_AS(validate_record(r0), DomainError);
  r0.genus = 1;
  CHECK_NOTHROW(validate_record(r0));
  KnotRecord empty;
  empty.name = "empty";
  CHECK_THROWS_AS(record_upsilon(empty), DomainError);
}
