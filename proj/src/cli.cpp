#include "kfu/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "kfu/certificates.hpp"
#include "kfu/errors.hpp"
#include "kfu/io.hpp"
#include "kfu/knots.hpp"
#include "kfu/upsilon.hpp"

namespace kfu {

namespace {

struct InputOptions {
  bool force_file = false;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

KnotRecord load(const std::string& source, const InputOptions& opts, std::istream& in) {
  if (!opts.force_file && source != "-") {
    if (auto builtin = builtin_knot(source)) return *builtin;
  }
  std::string text;
  if (source == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(source);
    if (!file) throw ParseError("cannot read '" + source + "' (not a builtin name or readable file)");
    text = read_all(file);
  }
  const auto j = parse_json(text);
  if (j.is_object() && j.contains("generators")) {
    KnotRecord r;
    r.complex = complex_from_json(j);
    r.name = r.complex->label.value_or(source);
    return r;
  }
  if (j.is_object() && j.contains("breakpoints")) {
    KnotRecord r;
    r.name = source;
    r.upsilon_override = pl_from_json(j);
    return r;
  }
  auto r = record_from_json(j);
  validate_record(r);
  return r;
}

const BifilteredComplex& need_complex(const KnotRecord& r) {
  if (!r.complex) throw DomainError("'" + r.name + "' has no chain complex");
  return *r.complex;
}

Rational parse_step(const std::string& text) {
  constexpr std::string_view prefix = "step=";
  if (text.rfind(prefix, 0) != 0) throw ParseError("--csv expects step=p/q, got '" + text + "'");
  auto step = parse_rational(std::string_view(text).substr(prefix.size()));
  if (step <= Rational(0)) throw ParseError("--csv step must be positive");
  return step;
}

int need_genus(const std::optional<int>& flag, const KnotRecord& r) {
  if (flag) return *flag;
  if (r.genus) return *r.genus;
  throw DomainError("'" + r.name + "' has no genus; pass --genus");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot Floer complexes, the Upsilon invariant and its certificates"};
  app.require_subcommand(1, 1);

  InputOptions io;
  std::string out_path;
  std::vector<std::string> inputs;
  std::optional<int> genus;
  std::optional<int> tau_flag;
  std::string csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this path");
    sub->add_flag("--file", io.force_file, "Interpret inputs as file paths");
  };
  auto add_inputs = [&](CLI::App* sub, int count, const char* help) {
    sub->add_option("input", inputs, help)->required()->expected(count);
    add_common(sub);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check complex axioms and admissibility");
  add_inputs(validate_cmd, 1, "complex file or builtin name");
  auto* build_cmd = app.add_subcommand("build", "Emit the JSON of a builtin knot");
  add_inputs(build_cmd, 1, "builtin name");
  auto* upsilon_cmd = app.add_subcommand("upsilon", "Compute Upsilon as an exact PL function");
  add_inputs(upsilon_cmd, 1, "complex file, PL file, knot record or builtin name ('-' for stdin)");
  upsilon_cmd->add_option("--csv", csv, "Emit samples instead, e.g. --csv step=1/4");
  auto* tau_cmd = app.add_subcommand("tau", "Compute tau from the Alexander filtration of the hat complex");
  add_inputs(tau_cmd, 1, "complex");
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two complexes");
  add_inputs(tensor_cmd, 2, "two complexes");
  auto* dual_cmd = app.add_subcommand("dual", "Dual (mirror) complex");
  add_inputs(dual_cmd, 1, "complex");
  auto* rv_cmd = app.add_subcommand("certify-rv", "Certify right-veering monodromy from Upsilon");
  add_inputs(rv_cmd, 1, "knot");
  rv_cmd->add_option("--genus", genus, "Genus of the fiber surface");
  auto* tight_cmd = app.add_subcommand("classify-tight", "Tight vs overtwisted for fibered knots in S^3");
  tight_cmd->add_option("input", inputs, "knot (optional when --tau is given)")->expected(0, 1);
  tight_cmd->add_option("--tau", tau_flag, "tau invariant");
  tight_cmd->add_option("--genus", genus, "genus");
  add_common(tight_cmd);
  auto* obstruct_cmd = app.add_subcommand("obstruct", "Concordance obstructions between two knots");
  add_inputs(obstruct_cmd, 2, "two knots");
  auto* ribbon_cmd = app.add_subcommand("ribbon-report", "Homotopy ribbon minimality report");
  add_inputs(ribbon_cmd, 1, "knot");
  ribbon_cmd->add_option("--genus", genus, "genus");
  auto* sample_cmd = app.add_subcommand("sample", "Sample Upsilon as CSV");
  add_inputs(sample_cmd, 1, "knot");
  sample_cmd->add_option("--csv", csv, "Sampling step, e.g. --csv step=1/4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string result;
  int status = 0;
  try {
    auto record = [&](std::size_t k) { return load(inputs.at(k), io, in); };

    if (validate_cmd->parsed()) {
      const auto r = record(0);
      const auto report = validate(need_complex(r));
      result = dump(to_json(report));
      if (!report.passed()) {
        err << "non-admissible complex\n";
        status = 1;
      }
    } else if (build_cmd->parsed()) {
      auto r = builtin_knot(inputs.at(0));
      if (!r) throw ParseError("unknown builtin knot '" + inputs.at(0) + "'");
      result = dump(r->complex ? complex_to_json(*r->complex) : pl_to_json(*r->upsilon_override));
    } else if (upsilon_cmd->parsed()) {
      const auto f = record_upsilon(record(0));
      result = csv.empty() ? dump(pl_to_json(f)) : pl_to_csv(f, parse_step(csv));
    } else if (sample_cmd->parsed()) {
      const auto f = record_upsilon(record(0));
      result = pl_to_csv(f, parse_step(csv.empty() ? "step=1/10" : csv));
    } else if (tau_cmd->parsed()) {
      const auto r = record(0);
      const auto& c = need_complex(r);
      Json j;
      j["tau"] = tau(c);
      j["upsilon_initial_slope"] = upsilon(c).slopes().front();
      result = dump(j);
    } else if (tensor_cmd->parsed()) {
      result = dump(complex_to_json(tensor(need_complex(record(0)), need_complex(record(1)))));
    } else if (dual_cmd->parsed()) {
      result = dump(complex_to_json(dual(need_complex(record(0)))));
    } else if (rv_cmd->parsed()) {
      const auto r = record(0);
      result = dump(to_json(certify_right_veering(record_upsilon(r), need_genus(genus, r))));
    } else if (tight_cmd->parsed()) {
      Json j;
      int t = 0;
      std::optional<KnotRecord> r;
      if (!inputs.empty()) r = record(0);
      if (tau_flag) {
        t = *tau_flag;
        j["tau_source"] = "flag";
      } else if (r && r->complex) {
        t = tau(*r->complex);
        j["tau_source"] = "hat_complex";
      } else if (r) {
        t = static_cast<int>(-record_upsilon(*r).slopes().front());
        j["tau_source"] = "upsilon_initial_slope";
      } else {
        throw ParseError("classify-tight needs a knot or --tau");
      }
      int g = 0;
      if (genus) {
        g = *genus;
      } else if (r && r->genus) {
        g = *r->genus;
      } else {
        throw DomainError("classify-tight needs a genus; pass --genus");
      }
      j["tau"] = t;
      j["genus"] = g;
      j["classification"] = to_string(classify_tightness(t, g));
      result = dump(j);
    } else if (obstruct_cmd->parsed()) {
      result = dump(to_json(obstruct_concordance(record(0), record(1))));
    } else if (ribbon_cmd->parsed()) {
      auto r = record(0);
      if (genus) r.genus = *genus;
      result = dump(to_json(ribbon_minimality_report(r)));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    file << result;
  }
  return status;
}

}  // namespace kfu
