#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "pseudoline/constructions.hpp"

namespace pseudoline {

enum class SearchKind { Exact, Heuristic };
enum class ProofStatus { Exhaustive, HeuristicBest };
std::string_view to_string(ProofStatus s);

struct SearchConfig {
  int n = 3;  // pseudo-lines, including the line at infinity in projective mode
  Mode mode = Mode::Affine;
  SearchKind kind = SearchKind::Exact;
  // Exact: branches whose upper bound falls below this are cut. When no
  // arrangement reaches it the search reruns without it, so the record is
  // always the true maximum.
  std::optional<int> prune_bound;
  // Leaves outside the group's canonical representatives are skipped.
  SymmetryGroup symmetry = SymmetryGroup::None;
  int threads = 1;
  bool ignore_ceiling = false;
  // Heuristic budget: total flip proposals split across restarts.
  long long steps = 200000;
  int restarts = 8;
  double time_limit_seconds = 0;  // 0 = none
  double start_temperature = 1.5;
  double end_temperature = 0.05;
  std::uint64_t rng_seed = 1;
  // Optional progress sink (stderr in the CLI).
  std::function<void(const std::string&)> progress;
};

// Default exact ceilings: 11 projective lines, 8 affine wires.
int feasibility_ceiling(Mode mode);

struct Record {
  int n = 0;
  Mode mode = Mode::Affine;
  int max_triangles = 0;
  CrossingWord witness = triangle3().word();  // the affine part for projective records
  // Exact: leaves that survived the bound. Heuristic: flip proposals.
  long long visited = 0;
  ProofStatus proof_status = ProofStatus::Exhaustive;
};

Arrangement record_arrangement(const Record& r);

// Every leaf word is the lexicographically smallest representative of its
// commutation class, visited in increasing lexicographic order. With a
// symmetry group only the group-minimal words are passed on. Returns the
// number of visits. Throws Error{FeasibilityCeilingExceeded}.
using Visitor = std::function<void(const CrossingWord&)>;
long long enumerate(const SearchConfig& config, const Visitor& visit);

// True if `word` (already in commutation normal form) is its group's
// canonical word.
bool is_canonical(const CrossingWord& word, SymmetryGroup group);

// Branch and bound over the enumeration tree. The upper bound at a partial
// word is the closed triangles plus a third of the segments that can still
// edge a triangle. Ties keep the lexicographically smallest witness; the
// parallel run partitions by prefix and reduces to the same record.
// Throws Error{FeasibilityCeilingExceeded}.
Record max_triangles_exact(const SearchConfig& config);

// Swaps the order of the triangle's three crossings. Throws
// Error{NotATriangle} unless `face` is a bounded triangle of `a`.
AffineArrangement flip(const AffineArrangement& a, int face);

// Uniform over random swap sequences, not over arrangements.
AffineArrangement random_arrangement(int wires, std::mt19937_64& rng);

// Simulated annealing over triangle flips (and changes of the line at
// infinity in projective mode). Deterministic for a fixed config.
Record heuristic_search(const SearchConfig& config);

// First arrangement in enumeration order that reaches the known maximum (or
// the bound) and has a line meeting the doubling hypothesis.
// Throws Error{FeasibilityCeilingExceeded}.
std::optional<Arrangement> find_doubling_seed(int n, Mode mode, bool ignore_ceiling = false);

struct ClaimReport {
  Record record;
  long long bound = 0;
  std::optional<long long> known;  // known exact maximum, when tabulated
  bool reached = false;            // record == bound
  long long gap = 0;               // bound - record
  long long rough_gap = 0;         // rough segment-count bound - record
  bool matches_known = true;
};

// Exhaustive maximum compared with the bound and the known value.
// Throws Error{FeasibilityCeilingExceeded}.
ClaimReport verify_claim(int n, Mode mode, int threads = 1, bool ignore_ceiling = false);

}  // namespace pseudoline
