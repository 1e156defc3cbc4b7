#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mss/core.hpp"
#include "mss/scoring.hpp"

namespace mss {

// Text file: decimal non-negative integers separated by arbitrary
// whitespace. origin names the source in error messages ("file: line N").
std::vector<symbol> parse_text(std::string_view content, std::string_view origin = "<text>");

// Pattern file: one position per line, comma-separated class members with an
// optional private bound suffix, e.g. "3,5,7@2". '#' lines and blank lines
// are ignored.
std::vector<pattern_position> parse_pattern(std::string_view content,
                                            std::string_view origin = "<pattern>");

// Assignment table file: "char,class_index,score" per line, '#' comments.
// Duplicate (char, class_index) pairs are an error.
assignment_table parse_assignment_table(std::string_view content,
                                        std::string_view origin = "<table>");

std::vector<symbol> load_text_file(const std::string& path);
std::vector<pattern_position> load_pattern_file(const std::string& path);
assignment_table load_assignment_table_file(const std::string& path);

std::string format_pattern(std::span<const pattern_position> positions);

void write_text_file(const std::string& path, std::span<const symbol> values);
void write_pattern_file(const std::string& path, std::span<const pattern_position> positions);

}  // namespace mss
