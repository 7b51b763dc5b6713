#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kfu/certificates.hpp"
#include "kfu/complex.hpp"
#include "kfu/knots.hpp"
#include "kfu/pl_function.hpp"
#include "kfu/upsilon.hpp"

namespace kfu {

using Json = nlohmann::ordered_json;

// All parsers throw ParseError on malformed documents or unknown keys.

Json complex_to_json(const BifilteredComplex& c);
BifilteredComplex complex_from_json(const Json& j);

Json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j);

/// Rows "t,value" from 0 to 2 in steps of `step`; the last row is always t = 2.
std::string pl_to_csv(const PLFunction& f, const Rational& step);

/// {"name", "genus"?, "fibered"?, "monodromy_right_veering", "complex"?,
///  "upsilon_override"?}; monodromy is "true", "false" or "unknown".
Json record_to_json(const KnotRecord& r);
KnotRecord record_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const HomologyReport& r);
Json to_json(const LatticePoint& p);
Json to_json(const NuCertificate& c);
Json to_json(const JumpCheck& c);
Json to_json(const RVCertificate& c);
Json to_json(const ConcordanceVerdict& v);
Json to_json(const RibbonReport& r);

/// Parses text; throws ParseError with the parser's message.
Json parse_json(std::string_view text);

}  // namespace kfu
