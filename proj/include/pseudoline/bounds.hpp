#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoline/arrangement.hpp"

namespace pseudoline {

// Which residue case of the polynomial bound applied.
enum class FormulaCase {
  Even04,       // n(2n-5)/6 affine, n(n-1)/3 projective
  One,          // (n(n-2)-2)/3
  Two,          // (n(2n-5)-4)/6 affine, (n(n-1)-5)/3 projective
  Odd35,        // n(n-2)/3
};

std::string_view to_string(FormulaCase c);
std::string_view to_string(Mode m);

struct BoundSpec {
  int n = 0;
  Mode mode = Mode::Affine;
  long long value = 0;
  FormulaCase formula = FormulaCase::Odd35;
};

// Throws Error{TooFewLines} for n < 3 (affine) or n < 4 (projective).
BoundSpec affine_bound(int n);
BoundSpec projective_bound(int n);
BoundSpec bound(int n, Mode mode);

// floor(n(n-2)/3) affine, floor(n(n-1)/3) projective.
long long rough_bound(int n, Mode mode);

enum class KnownStatus {
  Exact,    // n <= 30: established maximum
  Open,     // one of the smallest n where attainment is still open
  Unknown,  // n > 30, not tabulated
};

struct KnownValue {
  int n = 0;
  Mode mode = Mode::Affine;
  KnownStatus status = KnownStatus::Unknown;
  std::optional<long long> exact_max;
  std::optional<long long> bound;
  bool reaches_bound = false;
  std::string note;
};

KnownValue known_exact(int n, Mode mode);

// Rejects values that contradict the table (e.g. the reported 42 for twelve
// projective lines, which is a misprint of 40).
bool consistent_with_known(int n, Mode mode, long long claimed_max);

// Smallest n where attainment of the bound is open.
const std::vector<int>& open_values();

struct FamilyRow {
  int m = 0;
  std::vector<int> offsets;  // 1 and/or 2
  std::vector<int> n;        // ascending
};

// n = m*2^t + offset for the tabulated m, up to `max_n`.
std::vector<FamilyRow> family_schedule(int max_n = 400);

}  // namespace pseudoline
