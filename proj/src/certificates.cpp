#include "kfu/certificates.hpp"

#include <algorithm>

#include "kfu/errors.hpp"

namespace kfu {

std::optional<OpenInterval> find_slope(const PLFunction& f, std::int64_t slope, const Rational& window_lo,
                                       const Rational& window_hi) {
  for (const auto& seg : f.segments()) {
    const auto lo = std::max(seg.lo, window_lo);
    const auto hi = std::min(seg.hi, window_hi);
    if (lo < hi && seg.slope == slope) return OpenInterval{lo, hi};
  }
  return std::nullopt;
}

RVCertificate certify_right_veering(const PLFunction& upsilon, int genus) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  RVCertificate cert;
  cert.genus_used = genus;
  cert.witness_interval = find_slope(upsilon, -genus, Rational(0), Rational(1));
  if (cert.witness_interval) cert.verdict = RVVerdict::right_veering_certified;
  return cert;
}

Tightness classify_tightness(int tau, int genus) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  // |tau| <= g4 <= g, so anything else is inconsistent input.
  if (tau > genus || -tau > genus) throw DomainError("|tau| exceeds the genus");
  return tau == genus ? Tightness::tight : Tightness::overtwisted;
}

namespace {

bool reaches_minimal_slope(const PLFunction& f, int genus) {
  return find_slope(f, -genus, Rational(0), Rational(1)).has_value();
}

void require_record(const KnotRecord& k) {
  if (!k.complex && !k.upsilon_override) throw DomainError("knot '" + k.name + "' has no upsilon data");
}

}  // namespace

ConcordanceVerdict obstruct_concordance(const KnotRecord& k0, const KnotRecord& k1) {
  require_record(k0);
  require_record(k1);
  const auto f0 = record_upsilon(k0);
  const auto f1 = record_upsilon(k1);

  ConcordanceVerdict out;
  if (f0 != f1) {
    out.verdict = ConcordanceOutcome::obstructed;
    out.reason = ObstructionReason::upsilon_mismatch;
    out.rules_fired.push_back("upsilon_is_a_concordance_invariant");
    std::vector<Rational> probes;
    std::set_union(f0.breakpoints().begin(), f0.breakpoints().end(), f1.breakpoints().begin(),
                   f1.breakpoints().end(), std::back_inserter(probes));
    for (const auto& t : probes) {
      if (f0(t) != f1(t)) {
        out.differing_at = t;
        break;
      }
    }
    return out;
  }

  const bool fibered0 = k0.fibered.value_or(false);
  const bool fibered1 = k1.fibered.value_or(false);
  if (fibered0 && fibered1 && k0.genus && k1.genus && reaches_minimal_slope(f0, *k0.genus) &&
      reaches_minimal_slope(f1, *k1.genus) && *k0.genus != *k1.genus) {
    out.verdict = ConcordanceOutcome::obstructed;
    out.reason = ObstructionReason::genus_mismatch;
    out.rules_fired.push_back("minimal_slope_fibered_concordant_knots_share_genus");
    return out;
  }

  auto right_veering_clash = [](const KnotRecord& a, const PLFunction& fa, const KnotRecord& b) {
    return a.genus && reaches_minimal_slope(fa, *a.genus) && b.fibered.value_or(false) && b.genus &&
           *b.genus == *a.genus && b.monodromy_right_veering == Monodromy::not_right_veering;
  };
  if (right_veering_clash(k0, f0, k1) || right_veering_clash(k1, f1, k0)) {
    out.verdict = ConcordanceOutcome::obstructed;
    out.reason = ObstructionReason::right_veering_mismatch;
    out.rules_fired.push_back("minimal_slope_forces_right_veering_on_same_genus_fibered_partner");
    return out;
  }
  return out;
}

RibbonReport ribbon_minimality_report(const KnotRecord& k) {
  if (!k.fibered.value_or(false)) throw DomainError("knot '" + k.name + "' is not known to be fibered");
  if (!k.genus) throw DomainError("knot '" + k.name + "' has no genus");
  require_record(k);
  const auto f = record_upsilon(k);

  RibbonReport r;
  r.knot = k.name;
  r.genus = *k.genus;
  r.witness = find_slope(f, -r.genus, Rational(0), Rational(2));
  r.hypothesis_holds = r.witness.has_value();
  r.unit_interval_witness = find_slope(f, -r.genus, Rational(0), Rational(1));
  r.holds_on_unit_interval = r.unit_interval_witness.has_value();
  if (r.hypothesis_holds) {
    r.minimal = true;
    r.mirror_minimal = true;
    r.ribbon_cancellation_unique = true;
    r.rules_fired = {"minimal_slope_on_[0,2]_implies_homotopy_ribbon_minimal",
                     "minimal_slope_on_[0,2]_implies_mirror_homotopy_ribbon_minimal",
                     "ribbon_sum_with_mirror_of_minimal_slope_partner_forces_equality"};
  }
  return r;
}

std::string to_string(RVVerdict v) {
  return v == RVVerdict::right_veering_certified ? "right_veering_certified" : "inconclusive";
}

std::string to_string(Tightness t) { return t == Tightness::tight ? "tight" : "overtwisted"; }

std::string to_string(ConcordanceOutcome o) {
  return o == ConcordanceOutcome::obstructed ? "obstructed" : "no_obstruction_found";
}

std::string to_string(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::upsilon_mismatch: return "upsilon_mismatch";
    case ObstructionReason::genus_mismatch: return "genus_mismatch";
    case ObstructionReason::right_veering_mismatch: return "right_veering_mismatch";
  }
  return "unknown";
}

}  // namespace kfu
