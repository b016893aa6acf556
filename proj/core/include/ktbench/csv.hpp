#pragma once

#include <string>
#include <vector>

namespace ktbench {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 if absent.
    int column(const std::string& name) const;
};

// Reads a delimited file with RFC-style quoting (embedded delimiters,
// quotes and newlines inside double-quoted fields). First row is the header.
CsvTable read_csv(const std::string& path, char delim = ',');

// Parses in-memory text; used by the reader and by tests.
CsvTable parse_csv(const std::string& text, char delim = ',');

// Quotes a field only when needed.
std::string csv_escape(const std::string& field, char delim = ',');

} // namespace ktbench
