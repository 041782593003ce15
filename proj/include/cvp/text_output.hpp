#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace cvp {

// Shortest decimal text that parses back to exactly the same value
// (negative zero is written as -0.0).
std::string format_double(double v);
std::string format_float(float v);

// JSON string literal (quoted, escaped). Throws DataError on invalid UTF-8.
std::string json_quote(std::string_view s);

// RFC 4180 field: quoted only when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

// Writes the whole file or throws DataError.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace cvp
