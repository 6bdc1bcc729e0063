#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pseudoline/arrangement.hpp"

namespace pseudoline {

using Arrangement = std::variant<AffineArrangement, ProjectiveArrangement>;

int line_count(const Arrangement& a);
Mode mode_of(const Arrangement& a);
// Triangles in the arrangement's own mode.
int triangle_count(const Arrangement& a);
// Unused segments: bounded ones (affine) or all (projective).
int unused_count(const Arrangement& a);

enum class Provenance { Analytic, SearchDerived, IngestedFile };
std::string_view to_string(Provenance p);

struct Seed {
  std::string name;
  Arrangement arrangement;
  Provenance provenance = Provenance::Analytic;
  std::string note;  // free text from the sidecar file
};

// Seeds live in `<root>/<mode>/<n>.arr` with a `<n>.provenance` sidecar.
class SeedStore {
 public:
  SeedStore() = default;
  explicit SeedStore(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const noexcept { return root_; }
  std::filesystem::path path_for(Mode mode, int n) const;
  std::optional<Seed> find(Mode mode, int n) const;
  void store(const Seed& seed) const;

 private:
  std::filesystem::path root_;
};

// Built-in names: "triangle3", "projective4". Other names "<mode>/<n>" are
// looked up in the store and verified against the bound or known maximum.
// Throws Error{UnknownSeed | SeedFailsBound}.
Seed seed(const std::string& name, const SeedStore& store = {});

enum class DoublingMode { AffineOdd, ProjectiveEven };

struct DoublingPlan {
  Arrangement input;
  int designated_line = 0;  // 1-based wire (affine) or label (projective)
  DoublingMode mode = DoublingMode::AffineOdd;
};

// Checks the plan's hypothesis. Throws Error{HypothesisNotMet}.
DoublingPlan make_plan(Arrangement input, int designated_line);

// Smallest line meeting the doubling hypothesis, if any.
std::optional<int> find_designated_line(const Arrangement& a);

struct DoublingResult {
  Arrangement output;
  int triangles_before = 0;
  int triangles_after = 0;
  int unused_before = 0;
  int unused_after = 0;
};

// Replaces the designated line by a bundle of woven wires. The exact triangle
// delta and the unused-segment count are re-verified; throws
// Error{HypothesisNotMet | ConstructionSelfCheckFailed}.
DoublingResult double_arrangement(const DoublingPlan& plan);

// Adds a wire crossing every other wire beyond all existing crossings.
// `side` in [0, 2n) picks the unbounded face pair the new line runs through:
// side mod n rotations, then the new wire crosses everything at the right end
// (side < n) or at the left end (side >= n). Throws Error{PositionOutOfRange}.
AffineArrangement add_far_line(const AffineArrangement& a, int side);

// Wedges among the faces the far line at `side` cuts off; equals the
// triangle gain of add_far_line.
int far_line_wedges(const AffineArrangement& a, int side);

// Maximises triangles over all 2n sides; smallest side wins ties.
AffineArrangement best_far_line(const AffineArrangement& a);
int best_far_line_side(const AffineArrangement& a);

struct FamilyStage {
  int lines = 0;
  std::string step;  // "seed", "double", "far-line", "closure"
  int triangles = 0;
  long long bound = 0;
  int unused = 0;
  int delta = 0;
};

struct FamilyResult {
  Arrangement arrangement;
  std::vector<FamilyStage> stages;
};

// Builds n = m*2^t + offset lines reaching the polynomial bound of `mode` by
// iterated doubling from a seed. Every stage is recounted.
// Throws Error{SeedUnavailable | StageFailedBound | InvalidArgument}.
FamilyResult family(int m, int t, int offset, Mode mode, const SeedStore& store = {});

}  // namespace pseudoline
