#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bifib/coefficients.hpp"

namespace bifib {

enum class TableFormat { Text, Csv, Json, Latex };

std::optional<TableFormat> parse_table_format(std::string_view name);

/// text: one row per line, entries separated by a tab.
/// csv: same with commas.
/// json: {"family", "method", "first_row", "rows": [["1"], ...]}.
/// latex: a tabular with an n\k header row.
std::string render_table(const CoeffTriangle& t, TableFormat format);

}  // namespace bifib
