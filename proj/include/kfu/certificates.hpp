#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfu/knots.hpp"
#include "kfu/pl_function.hpp"
#include "kfu/rational.hpp"

namespace kfu {

struct OpenInterval {
  Rational lo;
  Rational hi;

  bool operator==(const OpenInterval&) const = default;
};

/// The first open segment of f inside `window` (clipped to it) on which the
/// slope is exactly `slope`. Breakpoints never count.
std::optional<OpenInterval> find_slope(const PLFunction& f, std::int64_t slope, const Rational& window_lo,
                                       const Rational& window_hi);

enum class RVVerdict { right_veering_certified, inconclusive };

struct RVCertificate {
  RVVerdict verdict = RVVerdict::inconclusive;
  std::optional<OpenInterval> witness_interval;  // inside [0,1), slope == -genus_used
  int genus_used = 0;
};

/// Certifies right-veering monodromy when upsilon has slope exactly -genus on
/// an open segment meeting [0,1). Never reports the negative: a failed
/// search is only "inconclusive". Throws DomainError for genus < 0.
RVCertificate certify_right_veering(const PLFunction& upsilon, int genus);

enum class Tightness { tight, overtwisted };

/// Fibered knots in S^3: tight exactly when tau equals the genus.
Tightness classify_tightness(int tau, int genus);

enum class ConcordanceOutcome { obstructed, no_obstruction_found };
enum class ObstructionReason { upsilon_mismatch, genus_mismatch, right_veering_mismatch };

struct ConcordanceVerdict {
  ConcordanceOutcome verdict = ConcordanceOutcome::no_obstruction_found;
  std::optional<ObstructionReason> reason;
  std::optional<Rational> differing_at;  // a t where the two upsilons differ
  std::vector<std::string> rules_fired;
};

/// Tries, in order: differing upsilon functions; two fibered knots that each
/// reach slope -g on [0,1) but have different genera; a knot reaching slope
/// -g on [0,1) against a fibered knot of the same genus asserted not
/// right-veering (checked in both directions). Throws DomainError when a
/// record lacks upsilon data.
ConcordanceVerdict obstruct_concordance(const KnotRecord& k0, const KnotRecord& k1);

struct RibbonReport {
  std::string knot;
  int genus = 0;
  bool hypothesis_holds = false;  // slope -g somewhere on [0,2]
  std::optional<OpenInterval> witness;
  bool holds_on_unit_interval = false;  // slope -g somewhere on [0,1]
  std::optional<OpenInterval> unit_interval_witness;
  bool minimal = false;         // K is homotopy-ribbon minimal among fibered knots
  bool mirror_minimal = false;  // so is its mirror
  bool ribbon_cancellation_unique = false;
  std::vector<std::string> rules_fired;
};

/// Throws DomainError unless the record is fibered with genus and upsilon.
RibbonReport ribbon_minimality_report(const KnotRecord& k);

std::string to_string(RVVerdict v);
std::string to_string(Tightness t);
std::string to_string(ConcordanceOutcome o);
std::string to_string(ObstructionReason r);

}  // namespace kfu
