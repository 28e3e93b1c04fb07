#include "bifib/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bifib {

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "latex") return TableFormat::Latex;
  return std::nullopt;
}

namespace {

std::string join_rows(const CoeffTriangle& t, char sep) {
  std::ostringstream out;
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? std::string(1, sep) : "") << row[k].get_str();
    out << '\n';
  }
  return out.str();
}

std::string latex(const CoeffTriangle& t) {
  std::size_t width = 0;
  for (const auto& row : t.rows) width = std::max(width, row.size());
  std::ostringstream out;
  out << "\\begin{tabular}{c|" << std::string(width, 'c') << "}\n";
  out << "$n\\backslash k$";
  for (std::size_t k = 0; k < width; ++k) out << " & " << k;
  out << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << t.first_row + i;
    for (std::size_t k = 0; k < width; ++k) {
      out << " & ";
      if (k < t.rows[i].size()) out << "$" << t.rows[i][k].get_str() << "$";
    }
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace

std::string render_table(const CoeffTriangle& t, TableFormat format) {
  switch (format) {
    case TableFormat::Text: return join_rows(t, '\t');
    case TableFormat::Csv: return join_rows(t, ',');
    case TableFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
      }
      nlohmann::json doc{{"family", to_string(t.family)},
                         {"method", to_string(t.method)},
                         {"first_row", t.first_row},
                         {"rows", std::move(rows)}};
      return doc.dump() + "\n";
    }
    case TableFormat::Latex: return latex(t);
  }
  return {};
}

}  // namespace bifib
