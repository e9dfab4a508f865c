#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"

namespace fdqpt::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double value);

void write_csv(std::ostream& out, const Table& table);
/// {"columns": [...], "rows": [[...], ...]}; non-finite numbers become the string tokens.
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace fdqpt::cli
