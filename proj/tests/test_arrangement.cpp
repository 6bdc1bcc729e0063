#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "pseudoline/arrangement.hpp"
#include "pseudoline/faces.hpp"
#include "support.hpp"

using namespace pseudoline;

namespace {

std::vector<int> positions(const AffineArrangement& a) {
  return {a.word().positions().begin(), a.word().positions().end()};
}

}  // namespace

TEST_SUITE("arrangement-core") {
  TEST_CASE("triangle3 and its reflections") {
    const auto t = triangle3();
    CHECK(positions(t) == std::vector<int>{1, 2, 1});
    CHECK(positions(reflect_horizontal(t)) == std::vector<int>{1, 2, 1});
    CHECK(positions(reflect_vertical(t)) == std::vector<int>{2, 1, 2});
    CHECK(error_code_of([] { AffineArrangement::from_positions(2, {1}); }) ==
          ErrorCode::TooFewLines);
  }

  TEST_CASE("reflections preserve the triangle count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const AffineArrangement a(random_word(3 + trial % 7, rng));
      const int t = count_triangles_affine(a);
      CHECK(count_triangles_affine(reflect_horizontal(a)) == t);
      CHECK(count_triangles_affine(reflect_vertical(a)) == t);
      CHECK(reflect_horizontal(reflect_horizontal(a)) == a);
      CHECK(reflect_vertical(reflect_vertical(a)) == a);
    }
  }

  TEST_CASE("rotation walks around the circle at infinity") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + trial % 6;
      const AffineArrangement a(random_word(n, rng));
      AffineArrangement r = a;
      for (int k = 0; k < n; ++k) {
        CHECK(count_triangles_affine(r) == count_triangles_affine(a));
        r = rotate(r);
      }
      // n steps are a half turn.
      CHECK(normal_form(r.word()) ==
            normal_form(reflect_vertical(reflect_horizontal(a)).word()));
    }
  }

  TEST_CASE("projectivize adds the line at infinity") {
    const auto p = projectivize(triangle3());
    CHECK(p.lines() == 4);
    CHECK(p.infinity_label() == 0);
    CHECK(p.labels() == std::vector<int>{1, 2, 3});
    CHECK(build_faces(p).faces().size() == 4u * 3u / 2u + 1u);
    CHECK(count_triangles_projective(p) == 4);
  }

  TEST_CASE("every line of the four-line projective arrangement gives four triangles") {
    const auto p = projectivize(triangle3());
    for (int label = 0; label < 4; ++label) {
      CHECK(count_triangles_projective(reroot_projective(p, label)) == 4);
      CHECK(count_triangles_projective(projectivize(reroot(p, label))) == 4);
    }
    CHECK(error_code_of([&] { reroot(p, 7); }) == ErrorCode::UnknownLine);
  }

  TEST_CASE("reroot keeps the projective arrangement") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 3 + trial % 6;
      const auto p = projectivize(AffineArrangement(random_word(m, rng)));
      const int p3 = count_triangles_projective(p);
      const auto key = canonical_key(p);
      for (int label = 0; label <= m; ++label) {
        const auto q = reroot_projective(p, label);
        CHECK(q.infinity_label() == label);
        CHECK(count_triangles_projective(q) == p3);
        CHECK(canonical_key(projectivize(reroot(p, label))) == key);
      }
    }
  }

  TEST_CASE("delete_line drops one wire's crossings") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + trial % 5;
      const AffineArrangement a(random_word(n, rng));
      const int line = 1 + trial % n;
      const auto d = delete_line(a, line);
      REQUIRE(d.lines() == n - 1);
      const auto before = local_sequences(a.word());
      const auto after = local_sequences(d.word());
      const int gone = line - 1;
      for (int w = 0, v = 0; w < n; ++w) {
        if (w == gone) continue;
        std::vector<int> expect;
        for (int x : before[w]) {
          if (x != gone) expect.push_back(x < gone ? x : x - 1);
        }
        CHECK(after[v++] == expect);
      }
    }
    CHECK(error_code_of([] { delete_line(triangle3(), 4); }) == ErrorCode::UnknownLine);
  }

  TEST_CASE("projective closure of the affine lines themselves") {
    const auto a = AffineArrangement::from_positions(4, {1, 2, 1, 3, 2, 1});
    const auto closed = as_projective_lines(a);
    CHECK(closed.lines() == 4);
    CHECK(count_triangles_projective(closed) == 4);
  }

  TEST_CASE("affine canonical keys separate exactly the reflection orbits") {
    for (int n : {4, 5}) {
      std::map<CanonicalKey, std::set<std::vector<int>>> by_key;
      for (const auto& w : all_reduced_words(n)) {
        by_key[canonical_key(AffineArrangement::from_positions(n, w), SymmetryGroup::Affine)]
            .insert(w);
      }
      const int oracle = orbit_count(
          n, {reversed_word, [n](std::vector<int> w) { return mirrored_word(std::move(w), n); }});
      CHECK(static_cast<int>(by_key.size()) == oracle);
    }
  }

  TEST_CASE("commutation keys separate exactly the commutation classes") {
    for (int n : {4, 5}) {
      std::set<CanonicalKey> keys;
      for (const auto& w : all_reduced_words(n)) {
        keys.insert(canonical_key(AffineArrangement::from_positions(n, w), SymmetryGroup::None));
      }
      CHECK(static_cast<int>(keys.size()) == orbit_count(n, {}));
    }
  }

  TEST_CASE("canonical representatives are fixed points") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const AffineArrangement a(random_word(3 + trial % 6, rng));
      for (auto g : {SymmetryGroup::None, SymmetryGroup::Affine}) {
        const auto rep = canonical_representative(a, g);
        CHECK(canonical_key(rep, g) == canonical_key(a, g));
        CHECK(canonical_representative(rep, g) == rep);
      }
      const auto p = projectivize(a);
      const auto rep = canonical_representative(p);
      CHECK(canonical_key(rep) == canonical_key(p));
    }
  }
}
