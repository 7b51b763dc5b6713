#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "kfu/f2.hpp"

using namespace kfu;

namespace {

BitVector bits(std::size_t size, std::initializer_list<std::size_t> ones) {
  BitVector v(size);
  for (auto k : ones) v.set(k);
  return v;
}

// Rank by counting the span: |span| = 2^rank.
std::size_t rank_by_enumeration(const std::vector<BitVector>& columns) {
  std::set<std::vector<std::size_t>> span;
  const std::size_t m = columns.size();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    BitVector v(columns.front().size());
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1U) v ^= columns[k];
    span.insert(v.ones());
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("BitVector basics across word boundaries") {
  BitVector v(130);
  CHECK(v.none());
  CHECK_FALSE(v.highest());
  v.set(3);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(*v.highest() == 129);
  CHECK(v.ones() == std::vector<std::size_t>{3, 64, 129});
  v.flip(129);
  CHECK(*v.highest() == 64);
  v ^= bits(130, {3, 64});
  CHECK(v.none());
}

TEST_CASE("PivotBasis membership and rank") {
  PivotBasis basis(4);
  CHECK(basis.insert(bits(4, {0, 1})));
  CHECK(basis.insert(bits(4, {1, 2})));
  CHECK_FALSE(basis.insert(bits(4, {0, 2})));
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(bits(4, {0, 2})));
  CHECK_FALSE(basis.contains(bits(4, {3})));
}

TEST_CASE("rank agrees with span enumeration on random matrices") {
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 8;
    std::vector<BitVector> columns(cols, BitVector(rows));
    for (auto& c : columns)
      for (std::size_t r = 0; r < rows; ++r)
        if (coin(rng)) c.set(r);
    CHECK(rank(columns) == rank_by_enumeration(columns));
  }
}

TEST_CASE("first_essential_class on a filtered complex with one surviving class") {
  // Mid positions p0 < p1 < p2 (levels 0,1,2), no outgoing boundary, one
  // incoming boundary p0 + p2. Classes: [p0] = [p2] != 0 and [p1] != 0.
  std::vector<std::size_t> levels{0, 1, 2};
  std::vector<BitVector> outgoing(3, BitVector(0));
  std::vector<BitVector> incoming{bits(3, {0, 2})};
  auto essential = first_essential_class(levels, outgoing, incoming);
  REQUIRE(essential);
  CHECK(essential->level == 0);
  CHECK(essential->cycle.ones() == std::vector<std::size_t>{0});

  // Kill p0 directly: the first surviving class appears at level 1.
  incoming = {bits(3, {0})};
  essential = first_essential_class(levels, outgoing, incoming);
  REQUIRE(essential);
  CHECK(essential->level == 1);
}

TEST_CASE("first_essential_class needs cycles, not just chains") {
  // p0 -> q0 and p1 -> q0: the first cycle is p0 + p1, born at level 1.
  std::vector<std::size_t> levels{0, 1};
  std::vector<BitVector> outgoing{bits(1, {0}), bits(1, {0})};
  auto essential = first_essential_class(levels, outgoing, {});
  REQUIRE(essential);
  CHECK(essential->level == 1);
  CHECK(essential->cycle.ones() == std::vector<std::size_t>{0, 1});
  CHECK(homology_dimension(2, outgoing, {}) == 1);
}

TEST_CASE("first_essential_class groups ties into one level") {
  std::vector<std::size_t> levels{0, 0};
  std::vector<BitVector> outgoing{bits(1, {0}), bits(1, {0})};
  auto essential = first_essential_class(levels, outgoing, {});
  REQUIRE(essential);
  CHECK(essential->level == 0);
}

TEST_CASE("first_essential_class reports vanishing homology") {
  std::vector<std::size_t> levels{0};
  std::vector<BitVector> outgoing{BitVector(0)};
  std::vector<BitVector> incoming{bits(1, {0})};
  CHECK_FALSE(first_essential_class(levels, outgoing, incoming));
}
