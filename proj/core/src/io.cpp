#include "ellone/io.hpp"

#include <fstream>
#include <sstream>

#include "ellone/error.hpp"

namespace ellone::io {
namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  // nlohmann reports the 1-based position of the offending byte
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <class G>
G graded_from_json(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs")) {
    throw ParseError(std::string(what) + ": expected {\"degree\": n, \"coeffs\": {...}}");
  }
  if (!j["degree"].is_number_integer()) throw ParseError(std::string(what) + ": degree must be an integer");
  if (!j["coeffs"].is_object()) throw ParseError(std::string(what) + ": coeffs must be an object");
  G out(j["degree"].get<int>());
  for (const auto& [key, value] : j["coeffs"].items()) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      const long long parsed = std::stoll(key, &used);
      if (used != key.size() || parsed < 0) throw std::invalid_argument(key);
      idx = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad simplex index '" + key + "'");
    }
    out.add(idx, rational_from_json(value));
  }
  return out;
}

template <class G>
Json graded_to_json(const G& g) {
  Json coeffs = Json::object();
  for (const auto& [idx, value] : g) coeffs[std::to_string(idx)] = to_string(value);
  return Json{{"degree", g.degree()}, {"coeffs", coeffs}};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_json(const std::filesystem::path& path) { return parse_json(read_file(path)); }

OrientedComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("simplices")) {
    throw ParseError("complex: expected {\"vertices\": N, \"simplices\": [...]}");
  }
  if (!j["vertices"].is_number_integer()) throw ParseError("complex: vertices must be an integer");
  if (!j["simplices"].is_array()) throw ParseError("complex: simplices must be an array");
  std::vector<Simplex> listed;
  for (const auto& s : j["simplices"]) {
    if (!s.is_array()) throw ParseError("complex: every simplex must be an array of vertex ids");
    Simplex tuple;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw ParseError("complex: vertex ids must be integers");
      tuple.push_back(v.get<int>());
    }
    listed.push_back(std::move(tuple));
  }
  return OrientedComplex::from_simplices(j["vertices"].get<int>(), listed);
}

Json complex_to_json(const OrientedComplex& k) {
  Json simplices = Json::array();
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const Simplex& s : k.simplices(d)) simplices.push_back(s);
  }
  return Json{{"vertices", k.vertex_count()}, {"simplices", simplices}};
}

Json index_report(const OrientedComplex& k) {
  Json out = Json::object();
  for (int d = 0; d <= k.dimension(); ++d) out[std::to_string(d)] = k.simplices(d);
  return out;
}

Chain chain_from_json(const Json& j) { return graded_from_json<Chain>(j, "chain"); }
Cochain cochain_from_json(const Json& j) { return graded_from_json<Cochain>(j, "cochain"); }
Json to_json(const Chain& c) { return graded_to_json(c); }
Json to_json(const Cochain& f) { return graded_to_json(f); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected an exact rational as \"p/q\" string or integer");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

}  // namespace ellone::io
