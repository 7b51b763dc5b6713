#include "kfu/upsilon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kfu/errors.hpp"

namespace kfu {

namespace {

const Rational kZero(0);
const Rational kTwo(2);

void require_parameter(const Rational& t) {
  if (t < kZero || t > kTwo) throw DomainError("t=" + to_string(t) + " outside [0,2]");
}

bool same_parity(int a, int b) { return (a - b) % 2 == 0; }

// Dense F2 matrices for the cohomological route, kept apart from the
// bit-packed reduction used by NuEvaluator.
using DenseVector = std::vector<std::uint8_t>;

// Row-reduces `rows` in place and returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(std::vector<DenseVector>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    auto hit = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                            [col](const DenseVector& row) { return row[col] != 0; });
    if (hit == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), hit);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != r && rows[k][col] != 0)
        for (std::size_t c = 0; c < width; ++c) rows[k][c] ^= rows[r][c];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Kernel of the linear map given column-wise, restricted to the allowed
// columns. Kernel vectors are indexed by all columns.
std::vector<DenseVector> kernel(const std::vector<DenseVector>& columns, std::size_t height,
                                const std::vector<bool>& allowed) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (allowed[c]) cols.push_back(c);
  std::vector<DenseVector> rows(height, DenseVector(cols.size(), 0));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t r = 0; r < height; ++r) rows[r][k] = columns[cols[k]][r];
  const auto pivots = row_reduce(rows, cols.size());
  std::vector<bool> is_pivot(cols.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<DenseVector> out;
  for (std::size_t free = 0; free < cols.size(); ++free) {
    if (is_pivot[free]) continue;
    DenseVector v(columns.size(), 0);
    v[cols[free]] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r][free] != 0) v[cols[pivots[r]]] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t dense_rank(std::vector<DenseVector> vectors, std::size_t width) {
  return row_reduce(vectors, width).size();
}

struct DenseSlice {
  std::vector<LatticePoint> points;  // grading d
  std::vector<DenseVector> out;      // per point, over opposite-parity generators
  std::vector<DenseVector> in;       // per opposite-parity generator, over points
  std::size_t opposite = 0;
};

DenseSlice dense_slice(const BifilteredComplex& c) {
  const int d = c.ambient_d;
  DenseSlice s;
  std::map<std::string, std::pair<bool, std::size_t>> where;  // name -> (in grading d, position)
  for (const auto& g : c.generators) {
    if (same_parity(g.maslov, d)) {
      where[g.name] = {true, s.points.size()};
      s.points.push_back(lattice_point(g, (d - g.maslov) / 2));
    } else {
      where[g.name] = {false, s.opposite++};
    }
  }
  s.out.assign(s.points.size(), DenseVector(s.opposite, 0));
  s.in.assign(s.opposite, DenseVector(s.points.size(), 0));
  for (const auto& e : c.differential) {
    const auto [src_mid, src_pos] = where.at(e.source);
    const auto [dst_mid, dst_pos] = where.at(e.target);
    if (src_mid) {
      s.out[src_pos][dst_pos] ^= 1;
    } else {
      s.in[src_pos][dst_pos] ^= 1;
    }
  }
  return s;
}

}  // namespace

Rational f_t(const Rational& t, const LatticePoint& p) {
  require_parameter(t);
  return (Rational(1) - t / 2) * p.i + (t / 2) * p.j;
}

std::optional<Rational> chain_filtration(const Rational& t, const std::vector<LatticePoint>& chain) {
  std::optional<Rational> best;
  for (const auto& p : chain) {
    const auto v = f_t(t, p);
    if (!best || v > *best) best = v;
  }
  return best;
}

NuEvaluator::NuEvaluator(const BifilteredComplex& complex) {
  require_admissible(complex);
  chains_ = slice_chains(complex, complex.ambient_d);
}

NuCertificate NuEvaluator::operator()(const Rational& t) const {
  require_parameter(t);
  const auto& points = chains_.points;
  const std::size_t n = points.size();

  std::vector<Rational> value(n);
  for (std::size_t k = 0; k < n; ++k) value[k] = f_t(t, points[k]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return value[a] < value[b]; });
  std::vector<std::size_t> rank_of(n);
  for (std::size_t k = 0; k < n; ++k) rank_of[order[k]] = k;

  // Ties share a level.
  std::vector<std::size_t> level_of(n);
  std::vector<Rational> level_value;
  for (std::size_t k = 0; k < n; ++k) {
    if (level_value.empty() || value[order[k]] != level_value.back()) level_value.push_back(value[order[k]]);
    level_of[k] = level_value.size() - 1;
  }

  std::vector<BitVector> outgoing;
  outgoing.reserve(n);
  for (auto k : order) outgoing.push_back(chains_.outgoing[k]);
  std::vector<BitVector> incoming;
  incoming.reserve(chains_.incoming.size());
  for (const auto& column : chains_.incoming) {
    BitVector permuted(n);
    for (auto k : column.ones()) permuted.set(rank_of[k]);
    incoming.push_back(std::move(permuted));
  }

  const auto essential = first_essential_class(level_of, outgoing, incoming);
  if (!essential) throw std::logic_error("nu_at: admissible complex without homology in grading d");

  NuCertificate cert;
  cert.t = t;
  cert.nu = level_value[essential->level];
  for (auto position : essential->cycle.ones()) {
    const auto k = order[position];
    cert.cycle.push_back(points[k]);
    if (value[k] == cert.nu) cert.realizing_points.push_back(points[k]);
  }
  return cert;
}

NuCertificate nu_at(const BifilteredComplex& complex, const Rational& t) {
  require_parameter(t);
  return NuEvaluator(complex)(t);
}

Rational nu_at_halfplane(const BifilteredComplex& complex, const Rational& t) {
  require_parameter(t);
  require_admissible(complex);
  const auto s = dense_slice(complex);
  const std::size_t n = s.points.size();

  // A cycle z0 outside the boundaries, then a cocycle phi with phi(B) = 0 and
  // phi(z0) = 1. Since H_d is one-dimensional, phi detects its generator.
  const auto cycles = kernel(s.out, s.opposite, std::vector<bool>(n, true));
  const auto boundary_rank = dense_rank(s.in, n);
  const DenseVector* z0 = nullptr;
  for (const auto& z : cycles) {
    auto with_z = s.in;
    with_z.push_back(z);
    if (dense_rank(with_z, n) > boundary_rank) {
      z0 = &z;
      break;
    }
  }
  if (z0 == nullptr) throw std::logic_error("nu_at_halfplane: no essential cycle");

  // Solve [B^T; z0^T] phi = [0; 1] by reducing the augmented system.
  std::vector<DenseVector> system;
  for (const auto& b : s.in) {
    auto row = b;
    row.push_back(0);
    system.push_back(std::move(row));
  }
  auto last = *z0;
  last.push_back(1);
  system.push_back(std::move(last));
  const auto pivots = row_reduce(system, n + 1);
  DenseVector phi(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) throw std::logic_error("nu_at_halfplane: inconsistent cocycle system");
    phi[pivots[r]] = system[r][n];
  }

  std::set<Rational> levels;
  for (const auto& p : s.points) levels.insert(f_t(t, p));
  for (const auto& level : levels) {
    std::vector<bool> allowed(n);
    for (std::size_t k = 0; k < n; ++k) allowed[k] = f_t(t, s.points[k]) <= level;
    for (const auto& z : kernel(s.out, s.opposite, allowed)) {
      std::uint8_t pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing ^= static_cast<std::uint8_t>(phi[k] & z[k]);
      if (pairing != 0) return level;
    }
  }
  throw std::logic_error("nu_at_halfplane: the whole slice does not surject");
}

Rational brute_force_nu(const BifilteredComplex& complex, const Rational& t) {
  require_parameter(t);
  require_admissible(complex);
  const auto s = dense_slice(complex);
  const std::size_t n = s.points.size();
  if (n > kBruteForceLimit)
    throw DomainError("brute_force_nu: grading slice has " + std::to_string(n) + " points, limit is " +
                      std::to_string(kBruteForceLimit));

  // Boundary span in echelon form over bitmasks of slice positions.
  std::vector<std::uint32_t> echelon;
  for (const auto& b : s.in) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (b[k]) mask |= std::uint32_t{1} << k;
    for (auto e : echelon) mask = std::min(mask, mask ^ e);
    if (mask != 0) {
      echelon.push_back(mask);
      std::sort(echelon.rbegin(), echelon.rend());
    }
  }
  auto in_boundaries = [&](std::uint32_t mask) {
    for (auto e : echelon) mask = std::min(mask, mask ^ e);
    return mask == 0;
  };

  std::vector<Rational> value(n);
  for (std::size_t k = 0; k < n; ++k) value[k] = f_t(t, s.points[k]);

  std::optional<Rational> best;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    DenseVector image(s.opposite, 0);
    std::optional<Rational> top;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1U)) continue;
      for (std::size_t r = 0; r < s.opposite; ++r) image[r] ^= s.out[k][r];
      if (!top || value[k] > *top) top = value[k];
    }
    if (std::any_of(image.begin(), image.end(), [](auto x) { return x != 0; })) continue;
    if (in_boundaries(mask)) continue;
    if (!best || *top < *best) best = top;
  }
  if (!best) throw std::logic_error("brute_force_nu: no essential cycle");
  return *best;
}

PLFunction upsilon(const BifilteredComplex& complex) {
  const NuEvaluator nu(complex);

  // Between consecutive ties of the slice the f_t-order is fixed, so nu_t is
  // linear there.
  std::set<std::pair<int, int>> positions;  // (i, A)
  for (const auto& p : nu.slice()) positions.emplace(p.i, p.alexander());
  std::set<Rational> ties{kZero, kTwo};
  for (auto a = positions.begin(); a != positions.end(); ++a) {
    for (auto b = std::next(a); b != positions.end(); ++b) {
      if (a->second == b->second) continue;
      const Rational t(2 * (b->first - a->first), a->second - b->second);
      if (t > kZero && t < kTwo) ties.insert(t);
    }
  }
  const std::vector<Rational> grid(ties.begin(), ties.end());

  std::vector<Rational> nu_grid;
  nu_grid.reserve(grid.size());
  for (const auto& t : grid) nu_grid.push_back(nu(t).nu);

  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const auto mid = (grid[k] + grid[k + 1]) / 2;
    const auto cert = nu(mid);
    const auto& p = cert.realizing_points.front();
    auto line = [&](const Rational& t) { return Rational(p.i) + t * p.alexander() / 2; };
    if (line(grid[k]) != nu_grid[k] || line(grid[k + 1]) != nu_grid[k + 1])
      throw std::logic_error("upsilon: nu_t is not linear on [" + to_string(grid[k]) + ", " +
                             to_string(grid[k + 1]) + "]");
  }

  std::vector<Rational> values;
  values.reserve(grid.size());
  for (const auto& v : nu_grid) values.push_back(-2 * v);
  return PLFunction(grid, std::move(values));
}

std::vector<JumpCheck> jump_report(const BifilteredComplex& complex, const PLFunction& f) {
  const NuEvaluator nu(complex);
  const auto& bp = f.breakpoints();
  std::vector<JumpCheck> out;
  for (std::size_t k = 1; k + 1 < bp.size(); ++k) {
    const auto& t0 = bp[k];
    const auto left = nu((bp[k - 1] + t0) / 2);
    const auto right = nu((t0 + bp[k + 1]) / 2);
    const auto at = nu(t0);

    JumpCheck check;
    check.t = t0;
    check.left = left.realizing_points.front();
    check.right = right.realizing_points.front();
    check.slope_jump = f.right_slope(t0) - f.left_slope(t0);
    check.predicted_jump = Rational(2) / t0 * (check.right.i - check.left.i);
    check.same_line = f_t(t0, check.left) == f_t(t0, check.right);
    check.slopes_match =
        f.left_slope(t0) == -check.left.alexander() && f.right_slope(t0) == -check.right.alexander();

    std::set<std::pair<int, int>> spots;
    for (const auto* cert : {&left, &right, &at})
      for (const auto& p : cert->realizing_points) spots.emplace(p.i, p.j);
    check.degenerate = spots.size() >= 3;

    check.passed = check.same_line && check.slopes_match && Rational(check.slope_jump) == check.predicted_jump;
    out.push_back(std::move(check));
  }
  return out;
}

int tau(const BifilteredComplex& complex) {
  require_admissible(complex);
  if (complex.ambient_d != 0) throw DomainError("tau requires ambient_d = 0");
  const auto vertical = vertical_complex(complex).complex;

  // Hat complex in homological gradings -1, 0, 1 (U is not inverted).
  std::vector<std::size_t> mid, lower, upper;
  for (std::size_t k = 0; k < vertical.generators.size(); ++k) {
    const int m = vertical.generators[k].maslov;
    if (m == 0) mid.push_back(k);
    if (m == -1) lower.push_back(k);
    if (m == 1) upper.push_back(k);
  }
  std::stable_sort(mid.begin(), mid.end(), [&](auto a, auto b) {
    return vertical.generators[a].alexander < vertical.generators[b].alexander;
  });
  auto position_in = [](const std::vector<std::size_t>& v, std::size_t k) -> std::optional<std::size_t> {
    auto it = std::find(v.begin(), v.end(), k);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };

  std::vector<BitVector> outgoing(mid.size(), BitVector(lower.size()));
  std::vector<BitVector> incoming(upper.size(), BitVector(mid.size()));
  for (const auto& e : vertical.differential) {
    const auto s = *vertical.index_of(e.source);
    const auto t = *vertical.index_of(e.target);
    if (auto ms = position_in(mid, s)) outgoing[*ms].flip(*position_in(lower, t));
    if (auto us = position_in(upper, s)) incoming[*us].flip(*position_in(mid, t));
  }
  if (homology_dimension(mid.size(), outgoing, incoming) != 1)
    throw DomainError("tau: hat homology in grading 0 does not have rank 1");

  std::vector<std::size_t> level_of(mid.size());
  std::vector<int> level_alexander;
  for (std::size_t k = 0; k < mid.size(); ++k) {
    const int a = vertical.generators[mid[k]].alexander;
    if (level_alexander.empty() || level_alexander.back() != a) level_alexander.push_back(a);
    level_of[k] = level_alexander.size() - 1;
  }
  const auto essential = first_essential_class(level_of, outgoing, incoming);
  if (!essential) throw std::logic_error("tau: homology count and reduction disagree");
  return level_alexander[essential->level];
}

}  // namespace kfu
