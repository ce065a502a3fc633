#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace emodes::cli {

// Flag misuse distinct from data errors: exits 2 instead of 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Whole file as bytes; "-" reads stdin to EOF.
std::string read_input(const std::string& path);

// Whitespace-separated tokens (newline-delimited values, blank lines fine).
std::vector<std::string> split_tokens(const std::string& text);

// Cells of one CSV column.  The first row is a header; `column` is either
// a header name or a 0-based index.  Quoted fields with "" escapes are
// understood; anything fancier is out of scope.
std::vector<std::string> csv_column(const std::string& text, const std::string& column);

}  // namespace emodes::cli
