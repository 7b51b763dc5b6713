#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kfu/f2.hpp"

namespace kfu {

struct Generator {
  std::string name;
  int alexander = 0;
  int maslov = 0;

  bool operator==(const Generator&) const = default;
};

/// The term U^upower * target inside the boundary of source.
struct DiffEntry {
  std::string source;
  std::string target;
  int upower = 0;

  bool operator==(const DiffEntry&) const = default;
};

/// A finitely generated model of CFK^infinity: a free F2[U]-basis with
/// Alexander/Maslov gradings and a differential whose terms carry
/// non-negative U-powers. Inverting U formally recovers the full complex.
struct BifilteredComplex {
  std::vector<Generator> generators;
  std::vector<DiffEntry> differential;
  int ambient_d = 0;  // correction term of the target spin^c class; 0 for S^3
  std::optional<std::string> label;

  std::optional<std::size_t> index_of(std::string_view name) const;
  int max_alexander() const;
  int max_abs_alexander() const;
};

/// The element U^{-upow} x, i.e. the triple [x, i, j] with i = upow and
/// j = A(x) + i.
struct LatticePoint {
  std::string generator;
  int i = 0;
  int j = 0;
  int upow = 0;

  int alexander() const { return j - i; }
  bool operator==(const LatticePoint&) const = default;
};

LatticePoint lattice_point(const Generator& g, int upow);
int maslov_of(const Generator& g, const LatticePoint& p);

struct ValidationReport {
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Structural axioms only: unique names, known endpoints, grading rules for
/// every entry, no duplicate entries, and d^2 = 0 over F2[U].
ValidationReport validate_structure(const BifilteredComplex& complex);

/// Structural axioms plus admissibility (homology of rank one in grading
/// ambient_d).
ValidationReport validate(const BifilteredComplex& complex);

/// Throws NonAdmissibleError listing every violation.
void require_admissible(const BifilteredComplex& complex);

/// One lattice point per generator whose Maslov grading has the parity of d,
/// shifted by a power of U into grading exactly d.
std::vector<LatticePoint> grading_slice(const BifilteredComplex& complex, int d);

/// Boundary of a chain of lattice points, summed over F2.
std::vector<LatticePoint> boundary(const BifilteredComplex& complex,
                                   const std::vector<LatticePoint>& chain);

/// Generators are ordered pairs in lexicographic order of (index1, index2);
/// the pair (x, y) is named "(x,y)".
BifilteredComplex tensor(const BifilteredComplex& lhs, const BifilteredComplex& rhs);

/// A <-> -A, M <-> -M, arrows reversed, ambient_d negated.
BifilteredComplex dual(const BifilteredComplex& complex);

/// Disjoint union of generators and differentials. Names must not collide.
BifilteredComplex direct_sum(const BifilteredComplex& lhs, const BifilteredComplex& rhs);

/// The hat complex: only U-power-zero arrows survive, filtered by Alexander
/// grading.
struct VerticalComplex {
  BifilteredComplex complex;
  std::vector<int> filtration_levels;  // distinct Alexander gradings, ascending

  /// Generators of the filtration level F_j (Alexander grading at most j).
  std::vector<std::string> level(int j) const;
};

VerticalComplex vertical_complex(const BifilteredComplex& complex);

struct HomologyReport {
  int grading = 0;
  std::size_t slice_size = 0;
  std::size_t cycle_dimension = 0;
  std::size_t boundary_dimension = 0;
  std::size_t homology_dimension = 0;

  bool admissible() const { return homology_dimension == 1; }
};

/// Requires a structurally valid complex.
HomologyReport verify_homology(const BifilteredComplex& complex);

/// Matrices of the differential around the grading-d slice. Positions are
/// the order of `grading_slice(complex, d)`; the neighbouring slices d-1 and
/// d+1 share the opposite-parity generators in their stored order.
struct SliceChains {
  std::vector<LatticePoint> points;         // grading d
  std::vector<std::size_t> generator_index; // generator behind each point
  std::vector<LatticePoint> upper_points;   // grading d+1
  std::vector<BitVector> outgoing;          // d: grading d -> d-1, per point
  std::vector<BitVector> incoming;          // d: grading d+1 -> d, per upper point
};

SliceChains slice_chains(const BifilteredComplex& complex, int d);

}  // namespace kfu
