#include "phca/csv.hpp"

#include <fstream>
#include <sstream>

namespace phca::csv {

std::vector<Row> parse(const std::string& text, const std::string& file_name) {
    std::vector<Row> rows;
    Row current;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;
    std::size_t line = 1;
    std::size_t row_line = 1;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty())
                    throw ParseError(file_name, line, "quote inside unquoted field");
                in_quotes = true;
                row_started = true;
                break;
            case ',':
                current.fields.push_back(std::move(field));
                field.clear();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || !field.empty()) {
                    current.fields.push_back(std::move(field));
                    field.clear();
                    current.line = row_line;
                    rows.push_back(std::move(current));
                    current = Row{};
                    row_started = false;
                }
                ++line;
                row_line = line;
                break;
            default:
                field += c;
                row_started = true;
                break;
        }
    }
    if (in_quotes) throw ParseError(file_name, row_line, "unterminated quoted field");
    if (row_started || !field.empty()) {
        current.fields.push_back(std::move(field));
        current.line = row_line;
        rows.push_back(std::move(current));
    }
    return rows;
}

std::vector<Row> parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

std::string encode_field(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string encode_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += encode_field(fields[i]);
    }
    out += '\n';
    return out;
}

}  // namespace phca::csv
