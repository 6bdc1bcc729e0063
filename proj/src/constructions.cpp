#include "pseudoline/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pseudoline/bounds.hpp"
#include "pseudoline/error.hpp"
#include "pseudoline/faces.hpp"
#include "pseudoline/io.hpp"

namespace pseudoline {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

FaceStructure faces_of(const Arrangement& a) {
  return std::visit([](const auto& x) { return build_faces(x); }, a);
}

}  // namespace

int line_count(const Arrangement& a) {
  return std::visit([](const auto& x) { return x.lines(); }, a);
}

Mode mode_of(const Arrangement& a) {
  return std::holds_alternative<AffineArrangement>(a) ? Mode::Affine : Mode::Projective;
}

int triangle_count(const Arrangement& a) { return face_stats(faces_of(a)).triangles; }

int unused_count(const Arrangement& a) { return face_stats(faces_of(a)).unused_segments; }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::SearchDerived: return "search-derived";
    case Provenance::IngestedFile: return "ingested-file";
  }
  return "?";
}

std::filesystem::path SeedStore::path_for(Mode mode, int n) const {
  return root_ / std::string(to_string(mode)) / (std::to_string(n) + ".arr");
}

std::optional<Seed> SeedStore::find(Mode mode, int n) const {
  if (root_.empty()) return std::nullopt;
  const auto path = path_for(mode, n);
  if (!std::filesystem::exists(path)) return std::nullopt;
  auto parsed = read_arr_file(path);
  Seed s{std::string(to_string(mode)) + "/" + std::to_string(n), std::move(parsed.arrangement),
         Provenance::IngestedFile, {}};
  auto side = path;
  side.replace_extension(".provenance");
  std::ifstream in(side);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const auto key = line.substr(0, eq);
    const auto value = line.substr(eq + 1);
    if (key == "provenance") {
      if (value == "analytic") s.provenance = Provenance::Analytic;
      if (value == "search-derived") s.provenance = Provenance::SearchDerived;
    } else if (key == "note") {
      s.note = value;
    }
  }
  if (mode_of(s.arrangement) != mode || line_count(s.arrangement) != n) {
    throw Error(ErrorCode::SeedFailsBound, path.string() + " does not hold a " +
                                               std::string(to_string(mode)) + " arrangement of " +
                                               std::to_string(n) + " lines");
  }
  return s;
}

void SeedStore::store(const Seed& seed) const {
  const auto mode = mode_of(seed.arrangement);
  const auto path = path_for(mode, line_count(seed.arrangement));
  std::filesystem::create_directories(path.parent_path());
  write_text_file(path, emit_arr(seed.arrangement));
  auto side = path;
  side.replace_extension(".provenance");
  std::ostringstream os;
  os << "provenance=" << to_string(seed.provenance) << "\n";
  os << "triangles=" << triangle_count(seed.arrangement) << "\n";
  if (!seed.note.empty()) os << "note=" << seed.note << "\n";
  write_text_file(side, os.str());
}

namespace {

long long target_for(Mode mode, int n) {
  const auto kv = known_exact(n, mode);
  if (kv.exact_max) return *kv.exact_max;
  return bound(n, mode).value;
}

}  // namespace

Seed seed(const std::string& name, const SeedStore& store) {
  if (name == "triangle3") return {name, triangle3(), Provenance::Analytic, {}};
  if (name == "projective4") return {name, projectivize(triangle3()), Provenance::Analytic, {}};

  const auto slash = name.find('/');
  if (slash != std::string::npos) {
    const auto mode_name = name.substr(0, slash);
    int n = 0;
    try {
      n = std::stoi(name.substr(slash + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::UnknownSeed, name);
    }
    if (mode_name != "affine" && mode_name != "projective") {
      throw Error(ErrorCode::UnknownSeed, name);
    }
    const Mode mode = mode_name == "affine" ? Mode::Affine : Mode::Projective;
    auto found = store.find(mode, n);
    if (!found) throw Error(ErrorCode::UnknownSeed, name);
    const int got = triangle_count(found->arrangement);
    const long long want = target_for(mode, n);
    if (got != want) {
      throw Error(ErrorCode::SeedFailsBound, name + " has " + std::to_string(got) +
                                                 " triangles, expected " + std::to_string(want));
    }
    return *found;
  }
  throw Error(ErrorCode::UnknownSeed, name);
}

namespace {

bool hypothesis_holds(const Arrangement& a, int line, DoublingMode mode) {
  const int n = line_count(a);
  const auto fs = faces_of(a);
  const auto& ids = fs.line_ids();
  if (std::find(ids.begin(), ids.end(), line) == ids.end()) return false;
  const int touch = triangles_touching_line(fs, line);
  return mode == DoublingMode::AffineOdd ? touch == n - 2 : touch == n - 1;
}

DoublingMode doubling_mode_for(const Arrangement& a) {
  const int n = line_count(a);
  if (mode_of(a) == Mode::Affine) {
    if (n % 2 == 0) {
      throw Error(ErrorCode::HypothesisNotMet, "affine doubling needs an odd number of lines");
    }
    return DoublingMode::AffineOdd;
  }
  if (n % 2 != 0) {
    throw Error(ErrorCode::HypothesisNotMet, "projective doubling needs an even number of lines");
  }
  return DoublingMode::ProjectiveEven;
}

// Word for the arrangement with wire `designated` (0-based) replaced by a
// bundle of n wires. Along the designated wire every other wire passes
// through the whole bundle; in each of the n gaps between those passes one
// bundle wire stays put and the rest swap in adjacent pairs, alternating
// which end stays put. n rounds of this odd-even pattern reverse the bundle.
std::vector<int> doubled_word(const CrossingWord& word, int designated, bool bottom_first) {
  const int n = word.wires();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  int track = designated;  // 0-based track of the bundle's lowest wire
  int gap = 0;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(crossing_count(2 * n - 1)));

  auto internal = [&]() {
    const bool bottom_still = (gap % 2 == 0) == bottom_first;
    for (int i = bottom_still ? 1 : 0; i + 1 < n; i += 2) out.push_back(track + i + 1);
    ++gap;
  };

  for (int p : word.positions()) {
    const int lo = p - 1;
    if (order[lo] == designated) {
      internal();
      // The wire above passes down through the bundle.
      for (int q = track + n; q >= track + 1; --q) out.push_back(q);
      ++track;
    } else if (order[p] == designated) {
      internal();
      for (int q = track; q <= track + n - 1; ++q) out.push_back(q);
      --track;
    } else {
      out.push_back(lo < track ? p : p + n - 1);
    }
    std::swap(order[lo], order[p]);
  }
  internal();
  return out;
}

int designated_wire(const ProjectiveArrangement& p, int label) {
  const auto& labels = p.labels();
  return static_cast<int>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

}  // namespace

DoublingPlan make_plan(Arrangement input, int designated_line) {
  const auto mode = doubling_mode_for(input);
  if (!hypothesis_holds(input, designated_line, mode)) {
    const int n = line_count(input);
    throw Error(ErrorCode::HypothesisNotMet,
                "line " + std::to_string(designated_line) + " must touch " +
                    std::to_string(mode == DoublingMode::AffineOdd ? n - 2 : n - 1) +
                    " triangles");
  }
  return DoublingPlan{std::move(input), designated_line, mode};
}

std::optional<int> find_designated_line(const Arrangement& a) {
  DoublingMode mode;
  try {
    mode = doubling_mode_for(a);
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto fs = faces_of(a);
  const int n = line_count(a);
  const int want = mode == DoublingMode::AffineOdd ? n - 2 : n - 1;
  for (int line : fs.line_ids()) {
    if (triangles_touching_line(fs, line) == want) return line;
  }
  return std::nullopt;
}

DoublingResult double_arrangement(const DoublingPlan& plan) {
  if (!hypothesis_holds(plan.input, plan.designated_line, plan.mode)) {
    throw Error(ErrorCode::HypothesisNotMet, "designated line does not touch enough triangles");
  }
  const int n = line_count(plan.input);
  DoublingResult res{plan.input, triangle_count(plan.input), 0, unused_count(plan.input), 0};

  AffineArrangement base = plan.mode == DoublingMode::AffineOdd
                               ? std::get<AffineArrangement>(plan.input)
                               : std::get<ProjectiveArrangement>(plan.input).affine_part();
  int wire = plan.designated_line - 1;
  int delta = (n - 1) * (n - 1);
  if (plan.mode == DoublingMode::ProjectiveEven) {
    auto p = std::get<ProjectiveArrangement>(plan.input);
    if (plan.designated_line == p.infinity_label()) {
      int other = 0;
      while (other == plan.designated_line) ++other;
      p = reroot_projective(p, other);
    }
    base = p.affine_part();
    wire = designated_wire(p, plan.designated_line);
    delta = (n - 1) * (n - 2);
  }

  // The weave has two mirror phases; keep whichever passes the exact recount.
  for (bool bottom_first : {true, false}) {
    auto word = doubled_word(base.word(), wire, bottom_first);
    AffineArrangement part = AffineArrangement::from_positions(2 * base.lines() - 1, word);
    Arrangement out = plan.mode == DoublingMode::AffineOdd ? Arrangement(part)
                                                           : Arrangement(projectivize(part));
    const int t = triangle_count(out);
    const int u = unused_count(out);
    if (t == res.triangles_before + delta && u == res.unused_before) {
      res.output = std::move(out);
      res.triangles_after = t;
      res.unused_after = u;
      return res;
    }
  }
  throw Error(ErrorCode::ConstructionSelfCheckFailed,
              "neither weave orientation adds exactly " + std::to_string(delta) + " triangles");
}

namespace {

AffineArrangement rotated(const AffineArrangement& a, int k) {
  AffineArrangement r = a;
  for (int i = 0; i < k; ++i) r = rotate(r);
  return r;
}

void check_side(const AffineArrangement& a, int side) {
  if (side < 0 || side >= 2 * a.lines()) {
    throw Error(ErrorCode::PositionOutOfRange,
                "far-line side " + std::to_string(side) + " outside [0, " +
                    std::to_string(2 * a.lines()) + ")");
  }
}

}  // namespace

AffineArrangement add_far_line(const AffineArrangement& a, int side) {
  check_side(a, side);
  const int n = a.lines();
  const auto r = rotated(a, side % n);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(crossing_count(n + 1)));
  if (side < n) {
    for (int p : r.word().positions()) word.push_back(p + 1);
    for (int p = 1; p <= n; ++p) word.push_back(p);
  } else {
    for (int p = n; p >= 1; --p) word.push_back(p);
    for (int p : r.word().positions()) word.push_back(p + 1);
  }
  return AffineArrangement::from_positions(n + 1, std::move(word));
}

int far_line_wedges(const AffineArrangement& a, int side) {
  check_side(a, side);
  const int n = a.lines();
  const auto fs = build_faces(rotated(a, side % n));
  const bool right = side < n;
  int count = 0;
  for (const auto& f : fs.faces()) {
    if (f.gap == 0 || f.gap == n || f.edges.size() != 2) continue;
    const bool on_side = right ? f.close_vertex < 0 : f.open_vertex < 0;
    if (on_side) ++count;
  }
  return count;
}

int best_far_line_side(const AffineArrangement& a) {
  int best_side = 0;
  int best = -1;
  for (int side = 0; side < 2 * a.lines(); ++side) {
    const int t = count_triangles_affine(add_far_line(a, side));
    if (t > best) {
      best = t;
      best_side = side;
    }
  }
  return best_side;
}

AffineArrangement best_far_line(const AffineArrangement& a) {
  return add_far_line(a, best_far_line_side(a));
}

namespace {

struct ChainBuilder {
  const SeedStore& store;
  std::vector<FamilyStage> stages;

  [[noreturn]] void fail_stage(const std::string& why) const {
    throw Error(ErrorCode::StageFailedBound,
                "stage " + std::to_string(stages.size()) + ": " + why);
  }

  void record(const Arrangement& a, const std::string& step, int delta) {
    FamilyStage st;
    st.lines = line_count(a);
    st.step = step;
    const auto stats = face_stats(faces_of(a));
    st.triangles = stats.triangles;
    st.unused = stats.unused_segments;
    st.delta = delta;
    const Mode mode = mode_of(a);
    st.bound = target_for(mode, st.lines);
    stages.push_back(st);
    if (st.triangles != bound(st.lines, mode).value) {
      fail_stage(std::to_string(st.lines) + " lines carry " + std::to_string(st.triangles) +
                 " triangles, bound is " + std::to_string(bound(st.lines, mode).value));
    }
  }

  Arrangement doubled(const Arrangement& a) {
    const auto line = find_designated_line(a);
    if (!line) fail_stage("no line meets the doubling hypothesis");
    const auto res = double_arrangement(make_plan(a, *line));
    record(res.output, "double", res.triangles_after - res.triangles_before);
    return res.output;
  }

  // Odd affine arrangement of n lines reaching the bound.
  AffineArrangement affine_odd(int n) {
    if (n == 3) {
      Arrangement a = triangle3();
      record(a, "seed", 0);
      return triangle3();
    }
    if (auto s = store.find(Mode::Affine, n)) {
      record(s->arrangement, "seed", 0);
      return std::get<AffineArrangement>(s->arrangement);
    }
    const int half = (n + 1) / 2;
    if (n % 2 == 0 || half < 3 || half == n) {
      throw Error(ErrorCode::SeedUnavailable, "no affine seed for " + std::to_string(n) + " lines");
    }
    const auto smaller = affine_odd(half);
    return std::get<AffineArrangement>(doubled(smaller));
  }

  // Even projective arrangement of n lines reaching the bound.
  ProjectiveArrangement projective_even(int n) {
    if (n == 4) {
      Arrangement a = projectivize(triangle3());
      record(a, "seed", 0);
      return std::get<ProjectiveArrangement>(a);
    }
    if (auto s = store.find(Mode::Projective, n)) {
      record(s->arrangement, "seed", 0);
      return std::get<ProjectiveArrangement>(s->arrangement);
    }
    const int half = (n + 2) / 2;
    if (half % 2 == 0 && half >= 4 && half < n) {
      const auto smaller = projective_even(half);
      return std::get<ProjectiveArrangement>(doubled(smaller));
    }
    // Odd affine chain plus the line at infinity.
    const auto part = affine_odd(n - 1);
    Arrangement p = projectivize(part);
    record(p, "closure", 0);
    return std::get<ProjectiveArrangement>(p);
  }
};

}  // namespace

FamilyResult family(int m, int t, int offset, Mode mode, const SeedStore& store) {
  if (m < 2 || t < 0 || t > 20 || (offset != 1 && offset != 2)) {
    throw Error(ErrorCode::InvalidArgument, "family needs m >= 2, 0 <= t <= 20, offset 1 or 2");
  }
  const long long n64 = (static_cast<long long>(m) << t) + offset;
  if (n64 > 200) throw Error(ErrorCode::InvalidArgument, "family size above 200 lines");
  const int n = static_cast<int>(n64);

  ChainBuilder chain{store, {}};
  if (mode == Mode::Affine && n % 2 == 1) {
    Arrangement a = chain.affine_odd(n);
    return {std::move(a), std::move(chain.stages)};
  }
  if (mode == Mode::Affine) {
    const auto odd = chain.affine_odd(n - 1);
    Arrangement a = best_far_line(odd);
    chain.record(a, "far-line", triangle_count(a) - count_triangles_affine(odd));
    return {std::move(a), std::move(chain.stages)};
  }
  if (n % 2 == 0) {
    Arrangement p = chain.projective_even(n);
    return {std::move(p), std::move(chain.stages)};
  }
  // Odd projective: the affine lines themselves, closed up in the plane.
  const auto odd = chain.affine_odd(n);
  Arrangement p = as_projective_lines(odd);
  chain.record(p, "closure", triangle_count(p) - count_triangles_affine(odd));
  return {std::move(p), std::move(chain.stages)};
}

}  // namespace pseudoline
