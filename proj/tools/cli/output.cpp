#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace fdqpt::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out + "\"";
}

std::string cell_csv(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    return csv_field(std::get<std::string>(cell));
}

std::string cell_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        const std::string text = format_number(*d);
        return std::isfinite(*d) ? text : json_string(text);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    return json_string(std::get<std::string>(cell));
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";  // also folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        out << (j ? "," : "") << csv_field(table.columns[j]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << cell_csv(row[j]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    out << "{\"columns\": [";
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        out << (j ? ", " : "") << json_string(table.columns[j]);
    }
    out << "], \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n  [" : "\n  [");
        const auto& row = table.rows[r];
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << cell_json(row[j]);
        out << "]";
    }
    out << (table.rows.empty() ? "]}\n" : "\n]}\n");
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
    if (format == OutputFormat::json) {
        write_json(out, table);
    } else {
        write_csv(out, table);
    }
}

}  // namespace fdqpt::cli
