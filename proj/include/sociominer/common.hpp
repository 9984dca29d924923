#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sociominer {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Whitespace-separated tokens; the project-wide definition of "word".
std::vector<std::string> split_words(std::string_view text);
std::size_t count_words(std::string_view text);

// FNV-1a 64-bit. Used for identity ids and artifact change detection,
// not for anything security-sensitive.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Fixed-point decimal rendering ("%.6f" by default); all CSV emitters
// go through this so artifacts are byte-stable.
std::string format_fixed(double value, int decimals = 6);

// Minimal CSV field quoting (commas, quotes, newlines).
std::string csv_field(std::string_view s);
// Splits one CSV line, honoring the quoting csv_field produces.
std::vector<std::string> csv_split(std::string_view line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
// Write to <path>.tmp then rename.
void write_file_atomic(const std::string& path, std::string_view content);

} // namespace sociominer
