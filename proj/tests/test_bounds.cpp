#include <doctest.h>

#include <cmath>

#include "pseudoline/bounds.hpp"
#include "support.hpp"

using namespace pseudoline;

namespace {

// The bounds written as rounded-down real expressions: the even affine bound
// is n(n-5/2)/3 rounded down, the odd bounds are n(n-2)/3 rounded down, and
// the projective bound for n = 2 mod 6 sits one below n(n-1)/3 rounded down.
long long oracle_bound(int n, Mode mode) {
  const long double x = n;
  if (mode == Mode::Affine) {
    if (n % 2 == 0) return static_cast<long long>(std::floor(x * (x - 2.5L) / 3.0L));
    return static_cast<long long>(std::floor(x * (x - 2.0L) / 3.0L));
  }
  if (n % 2 == 1) return static_cast<long long>(std::floor(x * (x - 2.0L) / 3.0L));
  const auto rough = static_cast<long long>(std::floor(x * (x - 1.0L) / 3.0L));
  return n % 6 == 2 ? rough - 1 : rough;
}

}  // namespace

TEST_SUITE("bounds-tables") {
  TEST_CASE("spot values") {
    CHECK(affine_bound(3).value == 1);
    CHECK(affine_bound(26).value == 203);
    CHECK(projective_bound(4).value == 4);
    CHECK(projective_bound(26).value == 215);
    CHECK(affine_bound(5).value == 5);
    CHECK(affine_bound(6).value == 7);
    CHECK(affine_bound(7).value == 11);
    CHECK(projective_bound(8).value == 17);
    CHECK(affine_bound(17).value == 85);
    CHECK(affine_bound(33).value == 341);
    CHECK(affine_bound(13).value == 47);
  }

  TEST_CASE("formula cases by residue") {
    CHECK(affine_bound(12).formula == FormulaCase::Even04);
    CHECK(affine_bound(10).formula == FormulaCase::Even04);
    CHECK(affine_bound(13).formula == FormulaCase::One);
    CHECK(affine_bound(14).formula == FormulaCase::Two);
    CHECK(affine_bound(15).formula == FormulaCase::Odd35);
    CHECK(projective_bound(11).formula == FormulaCase::Odd35);
  }

  TEST_CASE("agrees with the rounded real expressions") {
    for (int n = 4; n <= 10000; ++n) {
      CHECK(affine_bound(n).value == oracle_bound(n, Mode::Affine));
      CHECK(projective_bound(n).value == oracle_bound(n, Mode::Projective));
    }
    CHECK(affine_bound(3).value == oracle_bound(3, Mode::Affine));
  }

  TEST_CASE("too few lines") {
    CHECK(error_code_of([] { affine_bound(2); }) == ErrorCode::TooFewLines);
    CHECK(error_code_of([] { projective_bound(3); }) == ErrorCode::TooFewLines);
  }

  TEST_CASE("the bounds never exceed the segment-count bound") {
    for (int n = 4; n <= 3000; ++n) {
      for (Mode mode : {Mode::Affine, Mode::Projective}) {
        CHECK(bound(n, mode).value <= rough_bound(n, mode));
      }
      // Affinely equality holds for every odd n and, among even n, only at 4.
      // Projectively it holds for n = 0, 4 (mod 6).
      const int r = n % 6;
      CHECK((affine_bound(n).value == rough_bound(n, Mode::Affine)) == (n % 2 == 1 || n == 4));
      CHECK((projective_bound(n).value == rough_bound(n, Mode::Projective)) ==
            (r == 0 || r == 4));
    }
  }

  TEST_CASE("known exact values") {
    CHECK(*known_exact(8, Mode::Projective).exact_max == 16);
    CHECK(*known_exact(11, Mode::Projective).exact_max == 32);
    CHECK(*known_exact(12, Mode::Projective).exact_max == 40);
    CHECK(*known_exact(14, Mode::Projective).exact_max == 58);
    CHECK(*known_exact(20, Mode::Projective).exact_max == 124);
    CHECK(*known_exact(11, Mode::Affine).exact_max == 32);
    CHECK(*known_exact(12, Mode::Affine).exact_max == 37);
    for (int n = 3; n <= 30; ++n) {
      const auto kv = known_exact(n, Mode::Affine);
      CHECK(kv.status == KnownStatus::Exact);
      CHECK(kv.reaches_bound == (n != 11 && n != 12));
    }
    for (int n = 4; n <= 30; ++n) {
      const auto kv = known_exact(n, Mode::Projective);
      const bool exception = n == 8 || n == 11 || n == 12 || n == 14 || n == 20;
      CHECK(kv.reaches_bound == !exception);
      if (!exception) CHECK(*kv.exact_max == projective_bound(n).value);
    }
    CHECK(*known_exact(3, Mode::Projective).exact_max == 4);
  }

  TEST_CASE("the reported 42 for twelve projective lines is rejected") {
    CHECK_FALSE(consistent_with_known(12, Mode::Projective, 42));
    CHECK(consistent_with_known(12, Mode::Projective, 40));
    CHECK_FALSE(known_exact(12, Mode::Projective).note.empty());
  }

  TEST_CASE("open and untabulated values") {
    CHECK(open_values() == std::vector<int>{31, 32, 37, 38, 43, 44, 47, 48, 55, 56});
    for (int n : open_values()) {
      CHECK(known_exact(n, Mode::Affine).status == KnownStatus::Open);
      CHECK_FALSE(known_exact(n, Mode::Affine).exact_max.has_value());
    }
    CHECK(known_exact(33, Mode::Affine).status == KnownStatus::Unknown);
    CHECK(known_exact(33, Mode::Affine).bound == 341);
  }

  TEST_CASE("family schedule rows") {
    const auto rows = family_schedule(300);
    REQUIRE(rows.size() == 8u);
    CHECK(rows[0].m == 4);
    CHECK(std::vector<int>(rows[0].n.begin(), rows[0].n.begin() + 8) ==
          std::vector<int>{5, 6, 9, 10, 17, 18, 33, 34});
    CHECK(rows[1].m == 6);
    CHECK(rows[1].n == std::vector<int>{7, 13, 25, 49, 97, 193});
    CHECK(rows[3].m == 18);
    CHECK(rows[3].n == std::vector<int>{19, 37, 73, 145, 289});
    CHECK(rows[6].m == 24);
    CHECK(rows[6].offsets == std::vector<int>{2});
  }
}
