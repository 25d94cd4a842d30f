// Tabular output shared by the CLI commands: CSV (9 significant digits) and
// JSON (17 significant digits), both locale independent.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include "pdm/verification.hpp"

namespace pdm::io {

struct Null {};
using Cell = std::variant<Null, bool, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Ordered key/value echo of the run configuration.
using ConfigEcho = std::vector<std::pair<std::string, Cell>>;

inline std::string format_double(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_cell(const Cell& c) {
  struct V {
    std::string operator()(Null) const { return "n/a"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d, 9); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(V{}, c);
}

inline std::string json_cell(const Cell& c) {
  struct V {
    std::string operator()(Null) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      if (!std::isfinite(d)) return "null";
      return format_double(d, 17);
    }
    std::string operator()(const std::string& s) const { return json_escape(s); }
  };
  return std::visit(V{}, c);
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_escape(t.columns[j]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const ConfigEcho& config, const Table& t) {
  os << "{\n  \"config\": {";
  for (std::size_t i = 0; i < config.size(); ++i) {
    os << (i ? ", " : "") << json_escape(config[i].first) << ": " << json_cell(config[i].second);
  }
  os << "},\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n    {" : "\n    {");
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      os << (j ? ", " : "") << json_escape(t.columns[j]) << ": " << json_cell(t.rows[r][j]);
    }
    os << "}";
  }
  os << (t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

inline Cell level_cell(int n) {
  if (n < 0) return Null{};
  return static_cast<std::int64_t>(n);
}

inline Table report_table(const std::vector<CheckReport>& reports) {
  Table t;
  t.columns = {"check_name", "case", "gamma_tilde", "n",     "y_min", "y_max", "points",
               "measured",   "tolerance", "bound",   "passed", "note"};
  for (const auto& r : reports) {
    std::vector<Cell> row;
    row.emplace_back(r.check_name);
    row.emplace_back(std::string(1, r.case_id));
    row.emplace_back(r.gamma_tilde);
    row.push_back(level_cell(r.n));
    if (r.grid) {
      row.emplace_back(r.grid->y_min);
      row.emplace_back(r.grid->y_max);
      row.emplace_back(static_cast<std::int64_t>(r.grid->n_points));
    } else {
      row.insert(row.end(), {Null{}, Null{}, Null{}});
    }
    row.emplace_back(r.measured);
    row.emplace_back(r.tolerance);
    row.emplace_back(std::string(r.bound == Bound::Upper ? "upper" : "lower"));
    row.emplace_back(r.passed);
    row.emplace_back(r.note);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace pdm::io
