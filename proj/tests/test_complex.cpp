#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <string>

#include "corpus.hpp"
#include "kfu/complex.hpp"
#include "kfu/errors.hpp"
#include "kfu/knots.hpp"

using namespace kfu;
using kfu::testing::hand_trefoil;

namespace {

// Independent d^2 check: square the differential as a matrix of polynomials
// in U, iterating over every generator triple.
bool square_vanishes(const BifilteredComplex& c) {
  std::map<std::pair<std::string, std::string>, std::map<int, int>> d;
  for (const auto& e : c.differential) ++d[{e.source, e.target}][e.upower];
  for (const auto& x : c.generators) {
    for (const auto& z : c.generators) {
      std::map<int, int> total;
      for (const auto& y : c.generators) {
        auto xy = d.find({x.name, y.name});
        auto yz = d.find({y.name, z.name});
        if (xy == d.end() || yz == d.end()) continue;
        for (const auto& [k1, n1] : xy->second)
          for (const auto& [k2, n2] : yz->second) total[k1 + k2] += n1 * n2;
      }
      for (const auto& [k, n] : total)
        if (n % 2 != 0) return false;
    }
  }
  return true;
}

// Gradings and arrows with the names erased, for comparisons up to renaming.
using Shape = std::pair<std::multiset<std::pair<int, int>>, std::multiset<std::tuple<int, int, int, int, int>>>;

Shape shape(const BifilteredComplex& c) {
  Shape s;
  for (const auto& g : c.generators) s.first.emplace(g.alexander, g.maslov);
  for (const auto& e : c.differential) {
    const auto& a = c.generators[*c.index_of(e.source)];
    const auto& b = c.generators[*c.index_of(e.target)];
    s.second.emplace(a.alexander, a.maslov, b.alexander, b.maslov, e.upower);
  }
  return s;
}

// Renames "((x,y),z)" to "(x,(y,z))" given the factor name lists.
std::string reassociate(const std::string& x, const std::string& y, const std::string& z) {
  return "(" + x + ",(" + y + "," + z + "))";
}

}  // namespace

TEST_CASE("validate: the hand-written trefoil passes") {
  const auto t = hand_trefoil();
  CHECK(validate(t).passed());
  CHECK(square_vanishes(t));
}

TEST_CASE("validate: the unknot passes") { CHECK(validate(unknot_complex()).passed()); }

TEST_CASE("validate: Maslov mismatch is reported") {
  BifilteredComplex c;
  c.generators = {{"a", 0, 0}, {"b", 0, 0}};
  c.differential = {{"b", "a", 1}};
  const auto report = validate(c);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violations.front().find("Maslov constraint") != std::string::npos);
}

TEST_CASE("validate: structural violations") {
  SUBCASE("duplicate names") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 0}, {"x", 0, 0}};
    CHECK_FALSE(validate(c).passed());
  }
  SUBCASE("unknown endpoint") {
    auto c = unknot_complex();
    c.differential = {{"x", "nowhere", 0}};
    CHECK_FALSE(validate(c).passed());
  }
  SUBCASE("arrow pointing up in Alexander grading") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 0}, {"y", 2, -1}};
    c.differential = {{"x", "y", 0}};
    const auto r = validate(c);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violations.front().find("Alexander") != std::string::npos);
  }
  SUBCASE("d^2 != 0") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 0}, {"y", 0, -1}, {"z", 0, -2}};
    c.differential = {{"x", "y", 0}, {"y", "z", 0}};
    CHECK_FALSE(square_vanishes(c));
    const auto r = validate(c);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violations.front().find("d^2") != std::string::npos);
  }
  SUBCASE("duplicate entry") {
    auto c = hand_trefoil();
    c.differential.push_back(c.differential.front());
    CHECK_FALSE(validate(c).passed());
  }
  SUBCASE("homology of rank two") {
    BifilteredComplex c;
    c.generators = {{"x", 0, 0}, {"y", 0, 0}};
    const auto h = verify_homology(c);
    CHECK(h.homology_dimension == 2);
    CHECK_FALSE(h.admissible());
    CHECK_FALSE(validate(c).passed());
    CHECK_THROWS_AS(require_admissible(c), NonAdmissibleError);
  }
}

TEST_CASE("grading_slice") {
  const auto t = hand_trefoil();
  const auto slice = grading_slice(t, 0);
  REQUIRE(slice.size() == 2);
  CHECK(slice[0] == LatticePoint{"a", 0, 1, 0});
  CHECK(slice[1] == LatticePoint{"c", 1, 0, 1});
  CHECK(grading_slice(unknot_complex(), 0) == std::vector<LatticePoint>{{"x", 0, 0, 0}});
  CHECK(grading_slice(unknot_complex(), 1).empty());
  const auto odd = grading_slice(t, 3);
  REQUIRE(odd.size() == 1);
  CHECK(odd[0] == LatticePoint{"b", 2, 2, 2});
}

TEST_CASE("tensor") {
  const auto t = hand_trefoil();
  SUBCASE("unknot is a unit") {
    const auto u = tensor(unknot_complex(), t);
    CHECK(shape(u) == shape(t));
    CHECK(u.generators.size() == 3);
  }
  SUBCASE("trefoil with itself") {
    const auto tt = tensor(t, t);
    CHECK(tt.generators.size() == 9);
    CHECK(tt.max_alexander() == 2);
    CHECK(validate(tt).passed());
    CHECK(square_vanishes(tt));
    CHECK(tt.generators[1].name == "(a,b)");  // lexicographic in (index1, index2)
  }
  SUBCASE("ambient_d adds") {
    auto shifted = unknot_complex();
    shifted.ambient_d = 2;
    shifted.generators[0].maslov = 2;
    CHECK(tensor(shifted, shifted).ambient_d == 4);
  }
  SUBCASE("rejects invalid input") {
    BifilteredComplex bad;
    bad.generators = {{"x", 0, 0}, {"y", 0, 0}};
    CHECK_THROWS_AS(tensor(bad, t), NonAdmissibleError);
  }
}

TEST_CASE("tensor is associative up to renaming") {
  const auto a = hand_trefoil();
  const auto b = figure_eight_complex();
  const auto c = dual(staircase(std::vector<int>{1, 2, 2, 1}));
  const auto left = tensor(tensor(a, b), c);
  const auto right = tensor(a, tensor(b, c));
  CHECK(shape(left) == shape(right));
  // Generator-level identification.
  std::map<std::string, Generator> right_by_name;
  for (const auto& g : right.generators) right_by_name.emplace(g.name, g);
  for (const auto& x : a.generators)
    for (const auto& y : b.generators)
      for (const auto& z : c.generators) {
        const auto lname = "((" + x.name + "," + y.name + ")," + z.name + ")";
        const auto& lg = left.generators[*left.index_of(lname)];
        const auto& rg = right_by_name.at(reassociate(x.name, y.name, z.name));
        CHECK(lg.alexander == rg.alexander);
        CHECK(lg.maslov == rg.maslov);
      }
}

TEST_CASE("dual") {
  SUBCASE("unknot is self-dual") {
    const auto u = dual(unknot_complex());
    CHECK(u.generators == unknot_complex().generators);
    CHECK(u.differential.empty());
  }
  SUBCASE("right trefoil to left trefoil") {
    const auto l = dual(hand_trefoil());
    CHECK(l.generators == std::vector<Generator>{{"a", -1, 0}, {"b", 0, 1}, {"c", 1, 2}});
    CHECK(l.differential == std::vector<DiffEntry>{{"a", "b", 1}, {"c", "b", 0}});
    CHECK(validate(l).passed());
  }
  SUBCASE("involution") {
    for (const auto& [name, c] : kfu::testing::corpus()) {
      const auto dd = dual(dual(c));
      CHECK(dd.generators == c.generators);
      CHECK(dd.differential == c.differential);
      CHECK(dd.ambient_d == c.ambient_d);
    }
  }
}

TEST_CASE("vertical_complex") {
  const auto v = vertical_complex(hand_trefoil());
  CHECK(v.complex.differential == std::vector<DiffEntry>{{"b", "c", 0}});
  CHECK(v.filtration_levels == std::vector<int>{-1, 0, 1});
  CHECK(v.level(0) == std::vector<std::string>{"b", "c"});
  CHECK(vertical_complex(unknot_complex()).complex.generators == unknot_complex().generators);
  CHECK(vertical_complex(figure_eight_complex()).complex.differential.size() == 2);
}

TEST_CASE("verify_homology") {
  CHECK(verify_homology(unknot_complex()).homology_dimension == 1);
  const auto h = verify_homology(hand_trefoil());
  CHECK(h.cycle_dimension == 2);  // a and c
  CHECK(h.boundary_dimension == 1);  // a + c
  CHECK(h.homology_dimension == 1);
  CHECK(h.admissible());
}

TEST_CASE("properties over random admissible complexes") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = kfu::testing::random_admissible(rng);
    CAPTURE(trial);
    REQUIRE(validate(c).passed());
    CHECK(square_vanishes(c));
    for (const auto& e : c.differential) {
      const auto& s = c.generators[*c.index_of(e.source)];
      const auto& t = c.generators[*c.index_of(e.target)];
      CHECK(t.maslov - s.maslov + 1 - 2 * e.upower == 0);
    }
    for (int d : {-3, -2, -1, 0, 1, 2}) {
      const auto slice = grading_slice(c, d);
      const auto expected = std::count_if(c.generators.begin(), c.generators.end(),
                                          [d](const Generator& g) { return (g.maslov - d) % 2 == 0; });
      CHECK(static_cast<long>(slice.size()) == expected);
      for (const auto& p : slice) {
        const auto& g = c.generators[*c.index_of(p.generator)];
        CHECK(p.j - p.i == g.alexander);
        CHECK(maslov_of(g, p) == d);
      }
    }
    // Dual swaps the grading d and -d slices.
    const auto dc = dual(c);
    CHECK(verify_homology(dc).slice_size == verify_homology(c).slice_size);
    CHECK(grading_slice(dc, -1).size() == grading_slice(c, 1).size());
  }
}

TEST_CASE("boundary squares to zero on random chains") {
  std::mt19937 rng(99);
  const auto c = tensor(hand_trefoil(), figure_eight_complex());
  std::uniform_int_distribution<int> shift(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LatticePoint> chain;
    for (const auto& g : c.generators)
      if (rng() % 2) chain.push_back(lattice_point(g, shift(rng)));
    CHECK(boundary(c, boundary(c, chain)).empty());
  }
}
