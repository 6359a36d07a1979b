#pragma once

// JSON forms used by the CLI and the C API. Every number is a fraction string.

#include <string>
#include <string_view>

#include <json.hpp>
#include "thompson/conjugacy.hpp"
#include "thompson/delta.hpp"
#include "thompson/plmap.hpp"
#include "thompson/roots.hpp"
#include "thompson/sigma.hpp"

namespace thompson {

using Json = nlohmann::json;

/// {"breakpoints": [["x","y"], ...]}
Json to_json(const PLMap& f);
inline Json to_json(const FElement& f) { return to_json(f.map()); }

/// Parses the breakpoint form into a normalized map of (0,1). Throws ParseError.
PLMap map_from_json(const Json& j);

/// Parses text: the JSON breakpoint form or "word:<letters>". Throws
/// ParseError on malformed text and DomainError (with the diagnosis) for
/// PL maps outside F.
FElement parse_element(std::string_view text);

/// As parse_element, but returns the map even when it is not in F.
PLMap parse_map(std::string_view text);

Json to_json(const FCheck& c);
Json to_json(const FiniteFunction& c);
/// {"sigma1": [...signs], "sigma2": [...slopes], "sigma3": [{"period","points"}]}
Json to_json(const SigmaInvariant& s);
/// {"chains": [{"entries", "lambda_exponents", "mu_exponents"}]}
Json to_json(const DeltaInvariant& d);
Json to_json(const CentralizerStructure& c);

}  // namespace thompson
