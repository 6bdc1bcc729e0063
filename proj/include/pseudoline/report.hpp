#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pseudoline/bounds.hpp"
#include "pseudoline/constructions.hpp"

namespace pseudoline {

struct TableRow {
  int n = 0;
  Mode mode = Mode::Affine;
  std::optional<long long> bound;  // absent below the formula's range
  std::optional<long long> known;
  KnownStatus status = KnownStatus::Unknown;
  bool reached = false;
  std::string note;
  std::optional<std::filesystem::path> witness;  // seed file reaching `known`
};

// Rows for n in [from, to], affine then projective.
std::vector<TableRow> known_values_table(const SeedStore& store, int from = 3, int to = 30);

// Aligned text: n, mode, bound, exact, status, witness/note.
std::string format_known_values(const std::vector<TableRow>& rows);
std::string known_values_json(const std::vector<TableRow>& rows);

// Aligned text: n, residue, bound, known exact, source.
std::string format_bounds_table(Mode mode, int from, int to);
std::string bounds_table_json(Mode mode, int from, int to);

}  // namespace pseudoline
