#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resmine::util {

// Splits text into lines. A trailing newline does not produce an empty
// final line; "a\nb" and "a\nb\n" both yield {"a", "b"}.
std::vector<std::string> split_lines(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_ws(std::string_view text);

bool glob_match(std::string_view pattern, std::string_view name);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

std::string trim(std::string_view text);

bool starts_with(std::string_view text, std::string_view prefix);

}  // namespace resmine::util
