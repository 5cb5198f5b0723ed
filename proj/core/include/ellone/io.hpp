#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"

namespace ellone::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line/column.
Json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path& path);
Json load_json(const std::filesystem::path& path);

/// {"vertices": N, "simplices": [[0,1],...]}; faces are completed on load.
OrientedComplex complex_from_json(const Json& j);
Json complex_to_json(const OrientedComplex& k);

/// Index assignment after face completion: {"0": [[0],[1],...], "1": [...], ...}.
Json index_report(const OrientedComplex& k);

/// {"degree": n, "coeffs": {"<simplex-index>": "p/q"}}
Chain chain_from_json(const Json& j);
Cochain cochain_from_json(const Json& j);
Json to_json(const Chain& c);
Json to_json(const Cochain& f);

/// Reads an exact rational from a JSON string ("p/q") or integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

}  // namespace ellone::io
