#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ek {

using Cell = std::variant<std::uint64_t, std::int64_t, double, bool, std::string>;

/// Tabular command output; rendered as CSV (header + rows) or as JSON
/// {"meta": {...}, "rows": [{column: value, ...}, ...]}.
struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Reals carry 12 significant digits; integers are exact.
std::string format_cell(const Cell& cell);

std::string render_csv(const Table& table);
std::string render_json(const Table& table);

} // namespace ek
