#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kfu/complex.hpp"
#include "kfu/pl_function.hpp"
#include "kfu/rational.hpp"

namespace kfu {

/// f_t([x,i,j]) = (1 - t/2) i + (t/2) j. Throws DomainError for t outside [0,2].
Rational f_t(const Rational& t, const LatticePoint& p);

/// F_t of a chain: the largest f_t over its summands; nullopt for the zero chain.
std::optional<Rational> chain_filtration(const Rational& t, const std::vector<LatticePoint>& chain);

struct NuCertificate {
  Rational t;
  Rational nu;
  std::vector<LatticePoint> realizing_points;  // summands of `cycle` with f_t == nu
  std::vector<LatticePoint> cycle;             // grading ambient_d, nonzero in homology
};

/// Evaluates nu_t repeatedly over one admissible complex. The cycle and
/// boundary matrices of the grading-d slice do not depend on t, so they are
/// built once; each evaluation only re-sorts the slice by f_t.
class NuEvaluator {
 public:
  /// Throws NonAdmissibleError.
  explicit NuEvaluator(const BifilteredComplex& complex);

  NuCertificate operator()(const Rational& t) const;

  const std::vector<LatticePoint>& slice() const { return chains_.points; }

 private:
  SliceChains chains_;
};

NuCertificate nu_at(const BifilteredComplex& complex, const Rational& t);

/// The smallest s such that the span of grading-d lattice points with
/// f_t <= s surjects onto H_d. Computed through a cocycle dual to the
/// generator of H_d, independently of nu_at.
Rational nu_at_halfplane(const BifilteredComplex& complex, const Rational& t);

/// Exhaustive search over all F2-combinations of the grading-d slice.
/// Throws DomainError when the slice holds more than 20 points.
Rational brute_force_nu(const BifilteredComplex& complex, const Rational& t);

inline constexpr std::size_t kBruteForceLimit = 20;

/// Upsilon(t) = -2 nu_t as an exact PL function on [0,2].
PLFunction upsilon(const BifilteredComplex& complex);

/// Slope-jump identity at one interior breakpoint.
struct JumpCheck {
  Rational t;
  LatticePoint left;   // realizes nu just left of t
  LatticePoint right;  // realizes nu just right of t
  std::int64_t slope_jump = 0;
  Rational predicted_jump;  // (2/t)(i' - i)
  bool same_line = false;   // f_t(left) == f_t(right)
  bool slopes_match = false;  // one-sided slopes equal -A of the realizing points
  bool degenerate = false;  // three or more realizing lattice positions near t
  bool passed = false;
};

std::vector<JumpCheck> jump_report(const BifilteredComplex& complex, const PLFunction& f);

/// Lowest Alexander level of the hat complex carrying the generator of
/// H_0. Requires ambient_d == 0.
int tau(const BifilteredComplex& complex);

}  // namespace kfu
