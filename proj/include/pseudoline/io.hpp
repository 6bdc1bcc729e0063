#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "pseudoline/constructions.hpp"
#include "pseudoline/faces.hpp"

namespace pseudoline {

// .arr text format:
//
//   # optional comment lines
//   affine <n>                      | projective <n> infinity=<label>
//   <p1> <p2> ... <pN>
//
// Positions are 1-based; for projective files they describe the affine part
// (n-1 wires), whose wires take the remaining labels in increasing order.
// LF line endings, single spaces, no trailing whitespace.
struct ParsedArr {
  Arrangement arrangement;
  std::map<std::string, std::string> comments;  // "# key=value" lines
};

// Throws Error{MalformedHeader | MalformedBody | <validation code>} with the
// line and column in the message.
ParsedArr parse_arr(std::string_view text);
Arrangement parse_arrangement(std::string_view text);

std::string emit_arr(const Arrangement& a);
std::string emit_arr(const Arrangement& a, const std::map<std::string, std::string>& comments);

ParsedArr read_arr_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Count report for the `count` command.
std::string stats_key_value(const Arrangement& a);
std::string stats_json(const Arrangement& a);

}  // namespace pseudoline
