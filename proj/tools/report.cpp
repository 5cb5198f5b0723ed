#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "ellone/io.hpp"
#include "ellone/rational.hpp"

namespace ellone::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

RunReport::RunReport(std::string command) : command_(std::move(command)) {}

std::string RunReport::add_input(const std::filesystem::path& path) {
  std::string text = io::read_file(path);
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_hex(text)}});
  return text;
}

namespace {

Json decimals(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : j.items()) out[key] = decimals(value);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& value : j) out.push_back(decimals(value));
    return out;
  }
  if (j.is_string()) {
    try {
      return to_decimal(parse_rational(j.get<std::string>()));
    } catch (const std::exception&) {
      return j;
    }
  }
  return j;
}

}  // namespace

Json RunReport::to_json(bool decimal) const {
  Json j;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["metadata"] = metadata_;
  j["results"] = results_;
  if (decimal) j["display"] = {{"note", "decimal rendering, display only"}, {"results", decimals(results_)}};
  j["timing"] = timing_;
  return j;
}

}  // namespace ellone::cli
