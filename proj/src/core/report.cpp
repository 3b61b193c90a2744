#include "core/report.hpp"

#include <algorithm>
#include <sstream>

namespace apurity {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c ? "  " : "") << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

}  // namespace

std::string Report::csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string Report::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::json: return doc.dump(2) + "\n";
    case OutputFormat::csv: return csv();
    case OutputFormat::table: {
      std::ostringstream os;
      os << "# " << doc.value("command", std::string("result")) << "  seed=" << doc.value("seed", std::string("?"))
         << '\n';
      os << table(header, rows);
      return os.str();
    }
  }
  return {};
}

}  // namespace apurity
