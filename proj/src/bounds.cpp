#include "pseudoline/bounds.hpp"

#include <algorithm>

#include "pseudoline/error.hpp"

namespace pseudoline {

std::string_view to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::Even04: return "n=0,4 mod 6";
    case FormulaCase::One: return "n=1 mod 6";
    case FormulaCase::Two: return "n=2 mod 6";
    case FormulaCase::Odd35: return "n=3,5 mod 6";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Affine ? "affine" : "projective"; }

namespace {

FormulaCase case_of(int n) {
  switch (n % 6) {
    case 0:
    case 4: return FormulaCase::Even04;
    case 1: return FormulaCase::One;
    case 2: return FormulaCase::Two;
    default: return FormulaCase::Odd35;
  }
}

void require_min(int n, int min) {
  if (n < min) {
    throw Error(ErrorCode::TooFewLines,
                "bound defined for n >= " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

// Exact division; the residue cases guarantee divisibility.
long long divide(long long num, long long den) {
  if (num % den != 0) throw Error(ErrorCode::Internal, "bound formula is not integral");
  return num / den;
}

}  // namespace

BoundSpec affine_bound(int n) {
  require_min(n, 3);
  const long long x = n;
  BoundSpec b{n, Mode::Affine, 0, case_of(n)};
  switch (b.formula) {
    case FormulaCase::Even04: b.value = divide(x * (2 * x - 5), 6); break;
    case FormulaCase::One: b.value = divide(x * (x - 2) - 2, 3); break;
    case FormulaCase::Two: b.value = divide(x * (2 * x - 5) - 4, 6); break;
    case FormulaCase::Odd35: b.value = divide(x * (x - 2), 3); break;
  }
  return b;
}

BoundSpec projective_bound(int n) {
  require_min(n, 4);
  const long long x = n;
  BoundSpec b{n, Mode::Projective, 0, case_of(n)};
  switch (b.formula) {
    case FormulaCase::Even04: b.value = divide(x * (x - 1), 3); break;
    case FormulaCase::One: b.value = divide(x * (x - 2) - 2, 3); break;
    case FormulaCase::Two: b.value = divide(x * (x - 1) - 5, 3); break;
    case FormulaCase::Odd35: b.value = divide(x * (x - 2), 3); break;
  }
  return b;
}

BoundSpec bound(int n, Mode mode) {
  return mode == Mode::Affine ? affine_bound(n) : projective_bound(n);
}

long long rough_bound(int n, Mode mode) {
  const long long x = n;
  if (mode == Mode::Affine) {
    require_min(n, 3);
    return x * (x - 2) / 3;
  }
  require_min(n, 4);
  return x * (x - 1) / 3;
}

const std::vector<int>& open_values() {
  static const std::vector<int> values = {31, 32, 37, 38, 43, 44, 47, 48, 55, 56};
  return values;
}

KnownValue known_exact(int n, Mode mode) {
  KnownValue kv;
  kv.n = n;
  kv.mode = mode;
  const int min = mode == Mode::Affine ? 3 : 4;
  if (n < min) {
    // Three projective lines always bound four triangles.
    if (mode == Mode::Projective && n == 3) {
      kv.status = KnownStatus::Exact;
      kv.exact_max = 4;
    }
    return kv;
  }
  kv.bound = bound(n, mode).value;
  if (n > 30) {
    const auto& open = open_values();
    kv.status = std::find(open.begin(), open.end(), n) != open.end() ? KnownStatus::Open
                                                                        : KnownStatus::Unknown;
    return kv;
  }
  kv.status = KnownStatus::Exact;
  long long value = *kv.bound;
  if (mode == Mode::Affine) {
    if (n == 11) value = 32;
    if (n == 12) value = 37;
  } else {
    switch (n) {
      case 8: value = 16; break;
      case 11: value = 32; break;
      case 12:
        value = 40;
        kv.note = "42 reported elsewhere is a misprint";
        break;
      case 14: value = 58; break;
      case 20: value = 124; break;
      default: break;
    }
  }
  kv.exact_max = value;
  kv.reaches_bound = value == *kv.bound;
  return kv;
}

bool consistent_with_known(int n, Mode mode, long long claimed_max) {
  const auto kv = known_exact(n, mode);
  if (kv.exact_max) return *kv.exact_max == claimed_max;
  return !kv.bound || claimed_max <= *kv.bound;
}

std::vector<FamilyRow> family_schedule(int max_n) {
  struct RowSpec {
    int m;
    bool plus_one;
    bool plus_two;
  };
  static const RowSpec rows[] = {
      {4, true, true},   {6, true, false},  {14, true, true}, {18, true, false},
      {20, true, true},  {22, true, true},  {24, false, true}, {26, true, true},
  };
  std::vector<FamilyRow> out;
  for (const auto& spec : rows) {
    FamilyRow row;
    row.m = spec.m;
    if (spec.plus_one) row.offsets.push_back(1);
    if (spec.plus_two) row.offsets.push_back(2);
    for (long long scale = spec.m; scale + 1 <= max_n; scale *= 2) {
      for (int off : row.offsets) {
        if (scale + off <= max_n) row.n.push_back(static_cast<int>(scale + off));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace pseudoline
