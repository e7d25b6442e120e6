#pragma once

// Minimal RFC-4180 CSV reading and writing.

#include <string>
#include <vector>

#include "phca/errors.hpp"

namespace phca::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line of the row's first character
};

// Parses quoted fields, doubled-quote escapes, CRLF and LF line endings.
// Embedded newlines inside quoted fields are preserved.
std::vector<Row> parse(const std::string& text, const std::string& file_name);

std::vector<Row> parse_file(const std::string& path);

// Quotes a field only when it needs quoting.
std::string encode_field(const std::string& field);

std::string encode_row(const std::vector<std::string>& fields);

}  // namespace phca::csv
