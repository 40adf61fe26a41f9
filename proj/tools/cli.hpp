#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace entpot::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kUsage = 2, kNotConverged = 3 };

using Cell = std::variant<double, long long, bool, std::string>;

/// Column-oriented payload shared by the CSV and JSON writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Reals are written with 12 significant digits, booleans as true/false.
std::string format_cell(const Cell& cell);
void write_csv(std::ostream& out, const Table& table);
/// Parses CSV produced by write_csv; cells become strings.
Table read_csv(std::istream& in);

/// {"columns": [...], "rows": [{column: value}, ...]} with the same
/// 12-digit rounding as CSV.
nlohmann::json table_json(const Table& table);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entpot::cli
