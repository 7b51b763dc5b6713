#include "kfu/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "kfu/errors.hpp"

namespace kfu {

namespace {

bool same_parity(int a, int b) { return (a - b) % 2 == 0; }

struct Arrow {
  std::size_t target;
  int upower;
};

// Outgoing arrows per generator index. Assumes every endpoint resolves.
std::vector<std::vector<Arrow>> adjacency(const BifilteredComplex& c) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t k = 0; k < c.generators.size(); ++k) index.emplace(c.generators[k].name, k);
  std::vector<std::vector<Arrow>> out(c.generators.size());
  for (const auto& e : c.differential) {
    out[index.at(e.source)].push_back({index.at(e.target), e.upower});
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string describe(const DiffEntry& e) {
  return "(" + e.source + " -> U^" + std::to_string(e.upower) + " " + e.target + ")";
}

}  // namespace

std::optional<std::size_t> BifilteredComplex::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].name == name) return k;
  return std::nullopt;
}

int BifilteredComplex::max_alexander() const {
  int best = 0;
  bool first = true;
  for (const auto& g : generators) {
    if (first || g.alexander > best) best = g.alexander;
    first = false;
  }
  return best;
}

int BifilteredComplex::max_abs_alexander() const {
  int best = 0;
  for (const auto& g : generators) best = std::max(best, std::abs(g.alexander));
  return best;
}

LatticePoint lattice_point(const Generator& g, int upow) {
  return LatticePoint{g.name, upow, g.alexander + upow, upow};
}

int maslov_of(const Generator& g, const LatticePoint& p) { return g.maslov + 2 * p.i; }

ValidationReport validate_structure(const BifilteredComplex& c) {
  ValidationReport report;
  auto& v = report.violations;

  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    if (!index.emplace(c.generators[k].name, k).second)
      v.push_back("duplicate generator name '" + c.generators[k].name + "'");
  }
  if (c.generators.empty()) v.push_back("complex has no generators");

  bool endpoints_ok = true;
  std::set<std::tuple<std::string_view, std::string_view, int>> seen;
  for (const auto& e : c.differential) {
    auto s = index.find(e.source);
    auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) {
      v.push_back("unknown generator in entry " + describe(e));
      endpoints_ok = false;
      continue;
    }
    if (!seen.emplace(e.source, e.target, e.upower).second)
      v.push_back("duplicate entry " + describe(e));
    if (e.upower < 0) v.push_back("negative U-power in entry " + describe(e));
    const auto& src = c.generators[s->second];
    const auto& dst = c.generators[t->second];
    if (dst.maslov != src.maslov - 1 + 2 * e.upower)
      v.push_back("Maslov constraint violated by entry " + describe(e) + ": M(target)=" +
                  std::to_string(dst.maslov) + ", expected " +
                  std::to_string(src.maslov - 1 + 2 * e.upower));
    if (src.alexander - dst.alexander + e.upower < 0)
      v.push_back("Alexander filtration constraint violated by entry " + describe(e));
  }
  if (!endpoints_ok || !report.passed()) return report;

  // d^2 = 0: two-step paths x -> y -> z with total U-power k come in pairs.
  const auto arrows = adjacency(c);
  for (std::size_t x = 0; x < arrows.size(); ++x) {
    std::map<std::pair<std::size_t, int>, int> paths;
    for (const auto& first : arrows[x])
      for (const auto& second : arrows[first.target])
        ++paths[{second.target, first.upower + second.upower}];
    for (const auto& [key, count] : paths) {
      if (count % 2 != 0)
        v.push_back("d^2 != 0: " + std::to_string(count) + " paths from '" + c.generators[x].name +
                    "' to U^" + std::to_string(key.second) + " '" + c.generators[key.first].name + "'");
    }
  }
  return report;
}

ValidationReport validate(const BifilteredComplex& c) {
  auto report = validate_structure(c);
  if (!report.passed()) return report;
  const auto homology = verify_homology(c);
  if (!homology.admissible())
    report.violations.push_back("homology in grading " + std::to_string(c.ambient_d) + " has rank " +
                                std::to_string(homology.homology_dimension) + ", expected 1");
  return report;
}

void require_admissible(const BifilteredComplex& c) {
  const auto report = validate(c);
  if (!report.passed()) throw NonAdmissibleError(join(report.violations, "; "));
}

std::vector<LatticePoint> grading_slice(const BifilteredComplex& c, int d) {
  std::vector<LatticePoint> out;
  for (const auto& g : c.generators) {
    if (same_parity(g.maslov, d)) out.push_back(lattice_point(g, (d - g.maslov) / 2));
  }
  return out;
}

std::vector<LatticePoint> boundary(const BifilteredComplex& c, const std::vector<LatticePoint>& chain) {
  const auto arrows = adjacency(c);
  std::map<std::pair<std::size_t, int>, int> terms;
  for (const auto& p : chain) {
    const auto x = c.index_of(p.generator);
    if (!x) throw DomainError("chain references unknown generator '" + p.generator + "'");
    for (const auto& a : arrows[*x]) ++terms[{a.target, p.upow - a.upower}];
  }
  std::vector<LatticePoint> out;
  for (const auto& [key, count] : terms)
    if (count % 2 != 0) out.push_back(lattice_point(c.generators[key.first], key.second));
  return out;
}

BifilteredComplex tensor(const BifilteredComplex& lhs, const BifilteredComplex& rhs) {
  require_admissible(lhs);
  require_admissible(rhs);

  auto pair_name = [](const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; };

  BifilteredComplex out;
  out.ambient_d = lhs.ambient_d + rhs.ambient_d;
  if (lhs.label || rhs.label) out.label = lhs.label.value_or("?") + "#" + rhs.label.value_or("?");

  std::set<std::string> names;
  for (const auto& a : lhs.generators) {
    for (const auto& b : rhs.generators) {
      auto name = pair_name(a.name, b.name);
      if (!names.insert(name).second) throw DomainError("tensor product name collision on '" + name + "'");
      out.generators.push_back({std::move(name), a.alexander + b.alexander, a.maslov + b.maslov});
    }
  }
  // Leibniz over F2: d(a x b) = da x b + a x db, with U-powers carried through.
  for (const auto& e : lhs.differential)
    for (const auto& b : rhs.generators)
      out.differential.push_back({pair_name(e.source, b.name), pair_name(e.target, b.name), e.upower});
  for (const auto& a : lhs.generators)
    for (const auto& e : rhs.differential)
      out.differential.push_back({pair_name(a.name, e.source), pair_name(a.name, e.target), e.upower});
  return out;
}

BifilteredComplex dual(const BifilteredComplex& c) {
  require_admissible(c);
  BifilteredComplex out;
  out.ambient_d = -c.ambient_d;
  if (c.label) out.label = "dual(" + *c.label + ")";
  for (const auto& g : c.generators) out.generators.push_back({g.name, -g.alexander, -g.maslov});
  for (const auto& e : c.differential) out.differential.push_back({e.target, e.source, e.upower});
  return out;
}

BifilteredComplex direct_sum(const BifilteredComplex& lhs, const BifilteredComplex& rhs) {
  if (lhs.ambient_d != rhs.ambient_d) throw DomainError("direct sum of complexes with different ambient_d");
  BifilteredComplex out = lhs;
  for (const auto& g : rhs.generators) {
    if (lhs.index_of(g.name)) throw DomainError("direct sum name collision on '" + g.name + "'");
    out.generators.push_back(g);
  }
  out.differential.insert(out.differential.end(), rhs.differential.begin(), rhs.differential.end());
  return out;
}

std::vector<std::string> VerticalComplex::level(int j) const {
  std::vector<std::string> out;
  for (const auto& g : complex.generators)
    if (g.alexander <= j) out.push_back(g.name);
  return out;
}

VerticalComplex vertical_complex(const BifilteredComplex& c) {
  VerticalComplex out;
  out.complex.generators = c.generators;
  out.complex.ambient_d = c.ambient_d;
  out.complex.label = c.label;
  for (const auto& e : c.differential)
    if (e.upower == 0) out.complex.differential.push_back(e);
  std::set<int> levels;
  for (const auto& g : c.generators) levels.insert(g.alexander);
  out.filtration_levels.assign(levels.begin(), levels.end());
  return out;
}

SliceChains slice_chains(const BifilteredComplex& c, int d) {
  SliceChains out;
  std::vector<std::size_t> position(c.generators.size(), 0);
  std::vector<std::size_t> upper_index;
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    const auto& g = c.generators[k];
    if (same_parity(g.maslov, d)) {
      position[k] = out.points.size();
      out.points.push_back(lattice_point(g, (d - g.maslov) / 2));
      out.generator_index.push_back(k);
    } else {
      position[k] = upper_index.size();
      upper_index.push_back(k);
      out.upper_points.push_back(lattice_point(c.generators[k], (d + 1 - g.maslov) / 2));
    }
  }
  const auto arrows = adjacency(c);
  for (auto k : out.generator_index) {
    BitVector column(upper_index.size());
    for (const auto& a : arrows[k]) column.flip(position[a.target]);
    out.outgoing.push_back(std::move(column));
  }
  for (auto k : upper_index) {
    BitVector column(out.points.size());
    for (const auto& a : arrows[k]) column.flip(position[a.target]);
    out.incoming.push_back(std::move(column));
  }
  return out;
}

HomologyReport verify_homology(const BifilteredComplex& c) {
  const auto structure = validate_structure(c);
  if (!structure.passed()) throw NonAdmissibleError(join(structure.violations, "; "));
  const auto chains = slice_chains(c, c.ambient_d);
  HomologyReport report;
  report.grading = c.ambient_d;
  report.slice_size = chains.points.size();
  report.cycle_dimension = chains.points.size() - rank(chains.outgoing);
  report.boundary_dimension = rank(chains.incoming);
  report.homology_dimension = report.cycle_dimension - report.boundary_dimension;
  return report;
}

}  // namespace kfu
