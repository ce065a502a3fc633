#include "dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace emodes::cli {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (ch != '\r') {
            cell.push_back(ch);
        }
    }
    cells.push_back(cell);
    return cells;
}

}  // namespace

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string token;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!token.empty()) {
                tokens.push_back(token);
                token.clear();
            }
        } else {
            token.push_back(ch);
        }
    }
    if (!token.empty()) tokens.push_back(token);
    return tokens;
}

std::vector<std::string> csv_column(const std::string& text, const std::string& column) {
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line))
        throw std::runtime_error("csv: empty file");
    const auto header = split_csv_row(line);

    std::size_t index = header.size();
    const bool numeric = !column.empty() &&
                         std::all_of(column.begin(), column.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
        index = static_cast<std::size_t>(std::stoull(column));
        if (index >= header.size())
            throw std::runtime_error("csv: column index " + column + " out of range (file has " +
                                     std::to_string(header.size()) + " columns)");
    } else {
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == column) index = c;
        if (index == header.size())
            throw std::runtime_error("csv: no column named '" + column + "' in header");
    }

    std::vector<std::string> cells;
    while (std::getline(stream, line)) {
        if (line.empty() || line == "\r") continue;
        const auto row = split_csv_row(line);
        cells.push_back(index < row.size() ? row[index] : std::string());
    }
    return cells;
}

}  // namespace emodes::cli
