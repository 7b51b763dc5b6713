#include "kfu/io.hpp"

#include <set>
#include <stdexcept>

#include "kfu/errors.hpp"

namespace kfu {

namespace {

void require_object(const Json& j, std::string_view what, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) throw ParseError("unknown key '" + key + "' in " + std::string(what));
  }
}

const Json& field(const Json& j, const char* key, std::string_view what) {
  if (!j.contains(key)) throw ParseError(std::string(what) + " is missing '" + key + "'");
  return j.at(key);
}

int get_int(const Json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + "." + key + " must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_string()) throw ParseError(std::string(what) + "." + key + " must be a string");
  return v.get<std::string>();
}

const Json& get_array(const Json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_array()) throw ParseError(std::string(what) + "." + key + " must be an array");
  return v;
}

Json interval_to_json(const std::optional<OpenInterval>& i) {
  if (!i) return nullptr;
  return Json::array({to_string(i->lo), to_string(i->hi)});
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json complex_to_json(const BifilteredComplex& c) {
  Json j;
  if (c.label) j["label"] = *c.label;
  j["ambient_d"] = c.ambient_d;
  j["generators"] = Json::array();
  for (const auto& g : c.generators)
    j["generators"].push_back({{"name", g.name}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  j["differential"] = Json::array();
  for (const auto& e : c.differential)
    j["differential"].push_back({{"from", e.source}, {"to", e.target}, {"upower", e.upower}});
  return j;
}

BifilteredComplex complex_from_json(const Json& j) {
  require_object(j, "complex", {"label", "ambient_d", "generators", "differential"});
  BifilteredComplex c;
  if (j.contains("label")) c.label = get_string(j, "label", "complex");
  c.ambient_d = get_int(j, "ambient_d", "complex");
  for (const auto& g : get_array(j, "generators", "complex")) {
    require_object(g, "generator", {"name", "alexander", "maslov"});
    c.generators.push_back(
        {get_string(g, "name", "generator"), get_int(g, "alexander", "generator"), get_int(g, "maslov", "generator")});
  }
  for (const auto& e : get_array(j, "differential", "complex")) {
    require_object(e, "differential entry", {"from", "to", "upower"});
    c.differential.push_back({get_string(e, "from", "differential entry"), get_string(e, "to", "differential entry"),
                              get_int(e, "upower", "differential entry")});
  }
  return c;
}

Json pl_to_json(const PLFunction& f) {
  Json j;
  j["breakpoints"] = Json::array();
  for (const auto& b : f.breakpoints()) j["breakpoints"].push_back(to_string(b));
  j["values"] = Json::array();
  for (const auto& v : f.values()) j["values"].push_back(to_string(v));
  j["slopes"] = f.slopes();
  return j;
}

PLFunction pl_from_json(const Json& j) {
  require_object(j, "PL function", {"breakpoints", "values", "slopes"});
  std::vector<Rational> bp;
  std::vector<Rational> val;
  for (const auto& b : get_array(j, "breakpoints", "PL function")) {
    if (!b.is_string()) throw ParseError("PL breakpoints must be \"p/q\" strings");
    bp.push_back(parse_rational(b.get<std::string>()));
  }
  for (const auto& v : get_array(j, "values", "PL function")) {
    if (!v.is_string()) throw ParseError("PL values must be \"p/q\" strings");
    val.push_back(parse_rational(v.get<std::string>()));
  }
  try {
    PLFunction f(std::move(bp), std::move(val));
    if (j.contains("slopes")) {
      const auto& s = j.at("slopes");
      if (!s.is_array() || s.get<std::vector<std::int64_t>>() != f.slopes())
        throw ParseError("PL slopes do not match breakpoints and values");
    }
    return f;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("PL slopes: ") + e.what());
  }
}

std::string pl_to_csv(const PLFunction& f, const Rational& step) {
  if (step <= Rational(0)) throw DomainError("sampling step must be positive");
  std::string out = "t,value\n";
  for (Rational t(0); t < Rational(2); t += step) out += to_string(t) + "," + to_string(f(t)) + "\n";
  out += to_string(Rational(2)) + "," + to_string(f(Rational(2))) + "\n";
  return out;
}

namespace {

std::string monodromy_text(Monodromy m) {
  switch (m) {
    case Monodromy::right_veering: return "true";
    case Monodromy::not_right_veering: return "false";
    case Monodromy::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

Json record_to_json(const KnotRecord& r) {
  Json j;
  j["name"] = r.name;
  if (r.genus) j["genus"] = *r.genus;
  if (r.fibered) j["fibered"] = *r.fibered;
  j["monodromy_right_veering"] = monodromy_text(r.monodromy_right_veering);
  if (r.complex) j["complex"] = complex_to_json(*r.complex);
  if (r.upsilon_override) j["upsilon_override"] = pl_to_json(*r.upsilon_override);
  return j;
}

KnotRecord record_from_json(const Json& j) {
  require_object(j, "knot record",
                 {"name", "genus", "fibered", "monodromy_right_veering", "complex", "upsilon_override"});
  KnotRecord r;
  r.name = get_string(j, "name", "knot record");
  if (j.contains("genus")) r.genus = get_int(j, "genus", "knot record");
  if (j.contains("fibered")) {
    if (!j.at("fibered").is_boolean()) throw ParseError("knot record.fibered must be a boolean");
    r.fibered = j.at("fibered").get<bool>();
  }
  if (j.contains("monodromy_right_veering")) {
    const auto m = get_string(j, "monodromy_right_veering", "knot record");
    if (m == "true") {
      r.monodromy_right_veering = Monodromy::right_veering;
    } else if (m == "false") {
      r.monodromy_right_veering = Monodromy::not_right_veering;
    } else if (m != "unknown") {
      throw ParseError("monodromy_right_veering must be \"true\", \"false\" or \"unknown\"");
    }
  }
  if (j.contains("complex")) r.complex = complex_from_json(j.at("complex"));
  if (j.contains("upsilon_override")) r.upsilon_override = pl_from_json(j.at("upsilon_override"));
  return r;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["violations"] = r.violations;
  return j;
}

Json to_json(const HomologyReport& r) {
  Json j;
  j["grading"] = r.grading;
  j["slice_size"] = r.slice_size;
  j["cycle_dimension"] = r.cycle_dimension;
  j["boundary_dimension"] = r.boundary_dimension;
  j["homology_dimension"] = r.homology_dimension;
  j["admissible"] = r.admissible();
  return j;
}

Json to_json(const LatticePoint& p) {
  Json j;
  j["generator"] = p.generator;
  j["i"] = p.i;
  j["j"] = p.j;
  return j;
}

Json to_json(const NuCertificate& c) {
  Json j;
  j["t"] = to_string(c.t);
  j["nu"] = to_string(c.nu);
  j["realizing_points"] = Json::array();
  for (const auto& p : c.realizing_points) j["realizing_points"].push_back(to_json(p));
  j["cycle"] = Json::array();
  for (const auto& p : c.cycle) j["cycle"].push_back(to_json(p));
  return j;
}

Json to_json(const JumpCheck& c) {
  Json j;
  j["t"] = to_string(c.t);
  j["left"] = to_json(c.left);
  j["right"] = to_json(c.right);
  j["slope_jump"] = c.slope_jump;
  j["predicted_jump"] = to_string(c.predicted_jump);
  j["same_line"] = c.same_line;
  j["slopes_match"] = c.slopes_match;
  j["degenerate"] = c.degenerate;
  j["passed"] = c.passed;
  return j;
}

Json to_json(const RVCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["witness_interval"] = interval_to_json(c.witness_interval);
  j["genus_used"] = c.genus_used;
  j["interval_convention"] = "[0,1)";
  j["rules_fired"] = Json::array();
  if (c.verdict == RVVerdict::right_veering_certified)
    j["rules_fired"].push_back("slope_minus_genus_on_[0,1)_implies_right_veering");
  return j;
}

Json to_json(const ConcordanceVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["reason"] = v.reason ? Json(to_string(*v.reason)) : Json(nullptr);
  j["differing_at"] = v.differing_at ? Json(to_string(*v.differing_at)) : Json(nullptr);
  j["rules_fired"] = v.rules_fired;
  return j;
}

Json to_json(const RibbonReport& r) {
  Json j;
  j["knot"] = r.knot;
  j["genus"] = r.genus;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["interval_convention"] = "[0,2]";
  j["witness_interval"] = interval_to_json(r.witness);
  j["holds_on_[0,1]"] = r.holds_on_unit_interval;
  j["witness_interval_[0,1]"] = interval_to_json(r.unit_interval_witness);
  j["homotopy_ribbon_minimal"] = r.minimal;
  j["mirror_homotopy_ribbon_minimal"] = r.mirror_minimal;
  j["ribbon_cancellation_unique"] = r.ribbon_cancellation_unique;
  j["rules_fired"] = r.rules_fired;
  return j;
}

}  // namespace kfu
