#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace apurity {

enum class OutputFormat { json, csv, table };

/// One command's output: the canonical JSON document plus a tabular view used for
/// the csv and table formats.
struct Report {
  nlohmann::ordered_json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;  // false when a check inside the command failed

  std::string render(OutputFormat format) const;
  std::string csv() const;
};

}  // namespace apurity
