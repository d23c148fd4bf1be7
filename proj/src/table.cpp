#include "ek/table.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>
#include <json.hpp>

namespace ek {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      overloaded{
          [](double v) -> nlohmann::ordered_json {
            if (!std::isfinite(v))
              return nullptr;
            // same 12-digit value the CSV shows
            return std::strtod(format_cell(v).c_str(), nullptr);
          },
          [](const auto& v) -> nlohmann::ordered_json { return v; },
      },
      cell);
}

} // namespace

std::string format_cell(const Cell& cell) {
  return std::visit(overloaded{
                        [](double v) { return fmt::format("{:.12g}", v); },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](const std::string& v) { return v; },
                        [](auto v) { return fmt::format("{}", v); },
                    },
                    cell);
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out += (i ? "," : "") + csv_escape(table.columns[i]);
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + csv_escape(format_cell(row[i]));
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta)
    doc["meta"][key] = to_json(value);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      obj[table.columns[i]] = to_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

} // namespace ek
