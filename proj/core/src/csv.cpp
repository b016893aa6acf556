#include "ktbench/csv.hpp"

#include <fstream>
#include <sstream>

#include "ktbench/errors.hpp"

namespace ktbench {

int CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable parse_csv(const std::string& text, char delim) {
    CsvTable table;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        row_has_data = true;
    };
    auto end_row = [&] {
        if (!row_has_data && row.empty()) return; // skip blank lines
        end_field();
        if (table.header.empty())
            table.header = std::move(row);
        else
            table.rows.push_back(std::move(row));
        row.clear();
        row_has_data = false;
    };

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
            row_has_data = true;
        } else if (c == delim) {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() || row_has_data || !row.empty()) end_row();
        } else if (c == '\r') {
            // swallowed; \r\n handled at the \n
        } else {
            field += c;
            row_has_data = true;
        }
    }
    if (!field.empty() || row_has_data || !row.empty()) end_row();
    return table;
}

CsvTable read_csv(const std::string& path, char delim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), delim);
}

std::string csv_escape(const std::string& field, char delim) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == delim || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace ktbench
