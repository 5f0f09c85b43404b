#pragma once
/* JSON encoding of ring elements and experiment reports.
 *
 * Coefficients ride as decimal strings: moduli reach 2^62, past the exact
 * integer range of common JSON consumers.  nlohmann's default object keeps
 * keys sorted, so serialized reports are byte-stable for fixed inputs.
 * Parsers accept either strings or unsigned JSON integers and throw
 * std::invalid_argument with the offending field on malformed input.
 */

#include <string>
#include <variant>

#include <json.hpp>

#include "iwa/invariants.hpp"
#include "iwa/lambda_algebra.hpp"
#include "iwa/padic.hpp"
#include "iwa/suite.hpp"
#include "iwa/theta.hpp"

namespace iwa {

using Json = nlohmann::json;

Json to_json(const PAdicScalar& s);
Json to_json(const SeriesElt& a);
Json to_json(const FiniteLevelElt& x);
Json to_json(const InvariantResult& r);
Json to_json(const ThreeTermReport& r);
Json to_json(const OrdinaryReport& r);
Json to_json(const NonordinaryReport& r);
Json to_json(const PropertyResult& r);
Json to_json(const SuiteReport& r);

PAdicScalar scalar_from_json(const Json& j);
SeriesElt series_from_json(const Json& j);
FiniteLevelElt finite_from_json(const Json& j);

// Dispatches on the shape key: "deg" for series, "level" for finite level.
std::variant<SeriesElt, FiniteLevelElt> element_from_json(const Json& j);

// Flat tables for spreadsheet use; one header line, one line per level row.
std::string render_csv(const NonordinaryReport& r);
std::string render_csv(const OrdinaryReport& r);

}  // namespace iwa
