#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ellone::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes);

/// Run report: deterministic fields first, wall time kept under "timing".
class RunReport {
 public:
  explicit RunReport(std::string command);

  /// Reads the file, records its digest and returns the text.
  std::string add_input(const std::filesystem::path& path);
  Json& metadata() { return metadata_; }
  Json& results() { return results_; }
  Json& timing() { return timing_; }

  /// With `decimal`, a display-only decimal rendering of every exact value is
  /// attached under "display".
  Json to_json(bool decimal) const;

 private:
  std::string command_;
  Json inputs_ = Json::array();
  Json metadata_ = Json::object();
  Json results_ = Json::object();
  Json timing_ = Json::object();
};

}  // namespace ellone::cli
