#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kfu/complex.hpp"
#include "kfu/laurent.hpp"
#include "kfu/pl_function.hpp"

namespace kfu {

BifilteredComplex unknot_complex();

/// Staircase complex of an L-space knot. `steps` alternates horizontal and
/// vertical arrow lengths starting from the top-left generator x0, which
/// sits in Maslov grading 0 at Alexander grading sum(horizontal steps).
/// Generators are x0, y1, x1, y2, x2, ... with d(y_k) = U^{h_k} x_{k-1} + x_k.
/// The list must be nonempty, of even length, positive and palindromic.
BifilteredComplex staircase(std::span<const int> steps);

/// Staircase steps read off the exponent gaps of an Alexander polynomial
/// whose nonzero coefficients alternate +1, -1, ..., +1.
std::vector<int> staircase_steps(const LaurentPoly& delta);

/// Positive torus knots come from their staircase; q < 0 gives the mirror
/// through dual().
BifilteredComplex torus_knot_complex(int p, int q);

/// Unit generator e plus one square box (side 1) centred at the origin.
BifilteredComplex figure_eight_complex();

/// An acyclic square box: a -> b vertical of length `side`, a -> U^side c
/// horizontal, and both closing on d. `a` sits at (alexander, maslov).
BifilteredComplex box_complex(int side, int alexander, int maslov, std::string_view prefix);

/// Symmetrized (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)); mirror invariant,
/// so the sign of q is ignored.
LaurentPoly torus_knot_alexander(int p, int q);

/// Delta_K(t^p) * Delta_{T(p,q)}(t), symmetrized.
LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q);

/// Top exponent of a symmetric Alexander polynomial.
int fibered_genus(const LaurentPoly& delta);

/// Closed form for the (2, 2n+1)-cable of T(2,-3), n >= 8:
/// -(n-1)t on [0, 2/3], 2 - (n+2)t on [2/3, 1], mirrored onto [1, 2].
PLFunction chen_cable_upsilon(int n);

enum class Monodromy { right_veering, not_right_veering, unknown };

struct KnotRecord {
  std::string name;
  std::optional<BifilteredComplex> complex;
  std::optional<int> genus;
  std::optional<bool> fibered;
  Monodromy monodromy_right_veering = Monodromy::unknown;  // asserted, never computed
  std::optional<PLFunction> upsilon_override;
};

/// Genus must be non-negative and, when a complex is present, equal its top
/// Alexander grading. Throws DomainError.
void validate_record(const KnotRecord& record);

/// The override when present, otherwise upsilon(complex). Throws DomainError
/// when neither is available.
PLFunction record_upsilon(const KnotRecord& record);

/// Resolves "unknot", "trefoil", "trefoil-left", "figure8", "torus:p,q",
/// "staircase:a,b,...", "chen-cable:n". Returns nullopt for names outside
/// this vocabulary; throws ParseError for malformed parameters.
std::optional<KnotRecord> builtin_knot(std::string_view name);

}  // namespace kfu
