#include "pseudoline/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "pseudoline/bounds.hpp"
#include "pseudoline/error.hpp"
#include "pseudoline/faces.hpp"

namespace pseudoline {

std::string_view to_string(ProofStatus s) {
  return s == ProofStatus::Exhaustive ? "exhaustive" : "heuristic-best";
}

int feasibility_ceiling(Mode mode) { return mode == Mode::Projective ? 11 : 8; }

Arrangement record_arrangement(const Record& r) {
  AffineArrangement a(r.witness);
  if (r.mode == Mode::Affine) return a;
  return projectivize(a);
}

namespace {

constexpr int kMaxWires = 16;

int wires_for(const SearchConfig& c) {
  const int wires = c.mode == Mode::Affine ? c.n : c.n - 1;
  if (wires < 3) {
    throw Error(ErrorCode::TooFewLines,
                std::to_string(c.n) + " lines is below the minimum for " +
                    std::string(to_string(c.mode)) + " search");
  }
  return wires;
}

void check_ceiling(const SearchConfig& c) {
  const int ceiling = feasibility_ceiling(c.mode);
  if (c.n > ceiling && !c.ignore_ceiling) {
    throw Error(ErrorCode::FeasibilityCeilingExceeded,
                "exact " + std::string(to_string(c.mode)) + " search is capped at " +
                    std::to_string(ceiling) + " lines");
  }
  if (wires_for(c) > kMaxWires) {
    throw Error(ErrorCode::FeasibilityCeilingExceeded,
                "exact search supports at most " + std::to_string(kMaxWires) + " wires");
  }
}

// Face in a gap between adjacent wires, tracked while the sweep is open.
struct GapFace {
  std::uint8_t edges = 0;
  bool left_open = false;  // present before the first crossing
  bool settled = false;    // known not to be a triangle
  std::uint8_t nseg = 0;
  std::array<std::uint8_t, 4> seg{};  // bounded segments seen before settling
};

// Sweep state after a prefix. A bounded segment is dead once both of its
// faces are settled; a third of the live segments bounds the triangles still
// to come, since no segment edges two triangles.
struct State {
  std::array<std::int8_t, kMaxWires> order{};
  std::array<std::int8_t, kMaxWires> crossed{};
  std::array<GapFace, kMaxWires + 1> gaps{};
  std::array<std::uint8_t, kMaxWires * kMaxWires> sides{};
  int closed = 0;
  int dead = 0;
};

class Tree {
 public:
  Tree(int wires, bool projective, bool track_faces)
      : m_(wires), projective_(projective), faces_(track_faces),
        total_(crossing_count(wires)),
        budget_(projective ? (wires + 1) * wires : wires * (wires - 2)),
        stack_(static_cast<std::size_t>(total_) + 1),
        word_(static_cast<std::size_t>(total_)) {
    State& s = stack_[0];
    for (int i = 0; i < m_; ++i) s.order[i] = static_cast<std::int8_t>(i);
    for (int g = 0; g <= m_; ++g) {
      auto& f = s.gaps[g];
      f.edges = (g == 0 || g == m_) ? 1 : 2;
      f.left_open = true;
      f.settled = !projective_;
    }
  }

  int total() const { return total_; }
  const std::vector<int>& word() const { return word_; }

  // A letter is allowed if the pair has not crossed yet and no larger letter
  // could be commuted past it to the right.
  bool allowed(int depth, int p) const {
    const State& s = stack_[depth];
    if (s.order[p - 1] > s.order[p]) return false;
    for (int j = depth - 1; j >= 0; --j) {
      const int c = word_[j];
      if (std::abs(c - p) < 2) break;
      if (c > p) return false;
    }
    return true;
  }

  void push(int depth, int p) {
    State& next = stack_[depth + 1];
    next = stack_[depth];
    word_[depth] = p;
    apply(next, p);
  }


  int upper_bound(int depth) const {
    const State& s = stack_[depth];
    return s.closed + (budget_ - 3 * s.closed - s.dead) / 3;
  }

  // Leaf count: closed triangles plus, projectively, the two-edged faces still
  // open at the right end.
  int leaf_triangles() const {
    const State& s = stack_[total_];
    int t = s.closed;
    if (projective_) {
      for (int g = 0; g <= m_; ++g) t += s.gaps[g].edges == 2;
    }
    return t;
  }


  int wires() const { return m_; }

 private:
  void mark(State& s, int seg) const {
    if (++s.sides[seg] == 2) ++s.dead;
  }

  void add_edge(State& s, GapFace& f, int seg, bool ray) const {
    ++f.edges;
    if (f.settled) {
      if (!ray) mark(s, seg);
      return;
    }
    if (!ray) f.seg[f.nseg++] = static_cast<std::uint8_t>(seg);
    const int threshold = f.left_open ? 3 : 4;
    if (f.edges >= threshold) {
      f.settled = true;
      for (int i = 0; i < f.nseg; ++i) mark(s, f.seg[i]);
    }
  }

  void apply(State& s, int p) const {
    const int a = s.order[p - 1];
    const int b = s.order[p];
    std::swap(s.order[p - 1], s.order[p]);
    if (!faces_) return;

    const GapFace& closing = s.gaps[p];
    if (closing.left_open ? (projective_ && closing.edges == 2) : closing.edges == 3) {
      ++s.closed;
    }
    const int ca = ++s.crossed[a];
    const int cb = ++s.crossed[b];
    const int sa = a * m_ + ca;
    const int sb = b * m_ + cb;
    const bool ray_a = ca == m_ - 1;
    const bool ray_b = cb == m_ - 1;
    add_edge(s, s.gaps[p - 1], sb, ray_b);
    add_edge(s, s.gaps[p + 1], sa, ray_a);
    GapFace fresh;
    fresh.edges = 2;
    if (!ray_a) fresh.seg[fresh.nseg++] = static_cast<std::uint8_t>(sa);
    if (!ray_b) fresh.seg[fresh.nseg++] = static_cast<std::uint8_t>(sb);
    s.gaps[p] = fresh;
  }

  int m_;
  bool projective_;
  bool faces_;
  int total_;
  int budget_;
  std::vector<State> stack_;
  std::vector<int> word_;
};

// Depth-first walk from `depth`; `leaf(tree)` at full words, `keep(tree, d)`
// decides whether to descend into depth d.
template <class Leaf, class Keep>
void walk(Tree& tree, int depth, Leaf&& leaf, Keep&& keep) {
  if (depth == tree.total()) {
    leaf(tree);
    return;
  }
  for (int p = 1; p < tree.wires(); ++p) {
    if (!tree.allowed(depth, p)) continue;
    tree.push(depth, p);
    if (!keep(tree, depth + 1)) continue;
    walk(tree, depth + 1, leaf, keep);
  }
}

CrossingWord leaf_word(const Tree& tree) {
  return CrossingWord::validate(tree.wires(), tree.word());
}

bool less_than(const AffineArrangement& candidate, const CrossingWord& word) {
  return normal_form(candidate.word()) < word;
}

bool beaten_by_reflection(const AffineArrangement& a, const CrossingWord& word) {
  const auto h = reflect_horizontal(a);
  return less_than(a, word) || less_than(h, word) || less_than(reflect_vertical(a), word) ||
         less_than(reflect_vertical(h), word);
}

}  // namespace

bool is_canonical(const CrossingWord& word, SymmetryGroup group) {
  const AffineArrangement a(word);
  switch (group) {
    case SymmetryGroup::None:
      return true;
    case SymmetryGroup::Affine:
      return !beaten_by_reflection(a, word);
    case SymmetryGroup::Projective: {
      const auto p = projectivize(a);
      const int m = a.lines();
      for (int label = 0; label <= m; ++label) {
        auto part = reroot(p, label);
        for (int k = 0; k < m; ++k) {
          if (beaten_by_reflection(part, word)) return false;
          part = rotate(part);
        }
      }
      return true;
    }
  }
  return true;
}

long long enumerate(const SearchConfig& config, const Visitor& visit) {
  check_ceiling(config);
  Tree tree(wires_for(config), config.mode == Mode::Projective, false);
  long long visits = 0;
  walk(
      tree, 0,
      [&](const Tree& t) {
        const auto w = leaf_word(t);
        if (!is_canonical(w, config.symmetry)) return;
        ++visits;
        if (visit) visit(w);
      },
      [](const Tree&, int) { return true; });
  return visits;
}

namespace {

struct Best {
  int count = -1;
  std::vector<int> word;
  long long visited = 0;
};

// Branch and bound below `depth` of an already positioned tree. `shared`
// carries the best count across workers; only strictly smaller upper bounds
// are cut, so every leaf reaching the final maximum is still seen.
Best bound_walk(Tree& tree, int depth, const SearchConfig& config, int floor,
                std::atomic<int>* shared) {
  Best best;
  long long leaves = 0;
  auto threshold = [&]() {
    int t = std::max(floor, best.count);
    if (shared) t = std::max(t, shared->load(std::memory_order_relaxed));
    return t;
  };
  walk(
      tree, depth,
      [&](const Tree& t) {
        if (config.progress && (++leaves & ((1 << 22) - 1)) == 0) {
          config.progress("leaves " + std::to_string(leaves) + ", best " +
                          std::to_string(best.count));
        }
        ++best.visited;
        const int count = t.leaf_triangles();
        if (count < threshold() || count <= best.count) return;
        if (!is_canonical(leaf_word(t), config.symmetry)) return;
        best.count = count;
        best.word = t.word();
        if (shared) {
          int cur = shared->load();
          while (cur < count && !shared->compare_exchange_weak(cur, count)) {
          }
        }
      },
      [&](const Tree& t, int d) { return t.upper_bound(d) >= threshold(); });
  return best;
}

std::vector<std::vector<int>> prefixes(int wires, bool projective, int want) {
  Tree probe(wires, projective, false);
  for (int depth = 1; depth < probe.total(); ++depth) {
    std::vector<std::vector<int>> out;
    walk(
        probe, 0,
        [](const Tree&) {},
        [&](const Tree& t, int d) {
          if (d < depth) return true;
          out.emplace_back(t.word().begin(), t.word().begin() + depth);
          return false;
        });
    if (static_cast<int>(out.size()) >= want || depth + 1 == probe.total()) return out;
  }
  return {{}};
}

Best run_exact(const SearchConfig& config, int floor) {
  const int wires = wires_for(config);
  const bool projective = config.mode == Mode::Projective;
  if (config.threads <= 1) {
    Tree tree(wires, projective, true);
    return bound_walk(tree, 0, config, floor, nullptr);
  }

  const auto tasks = prefixes(wires, projective, 16 * config.threads);
  std::vector<Best> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> shared{-1};
  std::mutex progress_lock;
  auto worker = [&]() {
    Tree tree(wires, projective, true);
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& prefix = tasks[i];
      int depth = 0;
      bool alive = true;
      for (int p : prefix) {
        tree.push(depth++, p);
        if (tree.upper_bound(depth) < std::max(floor, shared.load())) {
          alive = false;
          break;
        }
      }
      if (alive) results[i] = bound_walk(tree, depth, config, floor, &shared);
      if (config.progress) {
        std::lock_guard lock(progress_lock);
        config.progress("task " + std::to_string(i + 1) + "/" + std::to_string(tasks.size()));
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Tasks are in lexicographic prefix order, so the first maximal task holds
  // the smallest witness.
  Best out;
  for (const auto& r : results) {
    out.visited += r.visited;
    if (r.count > out.count) {
      out.count = r.count;
      out.word = r.word;
    }
  }
  return out;
}

}  // namespace

Record max_triangles_exact(const SearchConfig& config) {
  check_ceiling(config);
  Best best = run_exact(config, config.prune_bound.value_or(0));
  if (best.count < 0) best = run_exact(config, 0);
  if (best.count < 0) throw Error(ErrorCode::Internal, "search produced no arrangement");

  Record r;
  r.n = config.n;
  r.mode = config.mode;
  r.max_triangles = best.count;
  r.witness = CrossingWord::validate(wires_for(config), best.word);
  r.visited = best.visited;
  r.proof_status = ProofStatus::Exhaustive;
  if (triangle_count(record_arrangement(r)) != r.max_triangles) {
    throw Error(ErrorCode::Internal, "witness recount disagrees with the search");
  }
  return r;
}

AffineArrangement flip(const AffineArrangement& a, int face) {
  const auto fs = build_faces(a);
  if (face < 0 || face >= static_cast<int>(fs.faces().size())) {
    throw Error(ErrorCode::NotATriangle, "face " + std::to_string(face) + " does not exist");
  }
  const auto& f = fs.faces()[face];
  if (!f.triangle || !f.bounded || f.edges.size() != 3) {
    throw Error(ErrorCode::NotATriangle, "face " + std::to_string(face) + " is not a triangle");
  }
  std::array<int, 3> lines{};
  for (int i = 0; i < 3; ++i) lines[i] = fs.segments()[f.edges[i]].line - 1;

  auto seqs = local_sequences(a.word());
  for (int i = 0; i < 3; ++i) {
    auto& seq = seqs[lines[i]];
    const int x = lines[(i + 1) % 3];
    const int y = lines[(i + 2) % 3];
    const auto ix = std::find(seq.begin(), seq.end(), x) - seq.begin();
    const auto iy = std::find(seq.begin(), seq.end(), y) - seq.begin();
    if (std::abs(ix - iy) != 1) throw Error(ErrorCode::Internal, "triangle sides not adjacent");
    std::swap(seq[ix], seq[iy]);
  }
  std::vector<int> start(a.lines());
  std::iota(start.begin(), start.end(), 0);
  return AffineArrangement::from_positions(a.lines(), sweep_from_sequences(start, seqs));
}

AffineArrangement random_arrangement(int wires, std::mt19937_64& rng) {
  std::vector<int> order(wires);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> word;
  std::vector<int> open;
  for (int step = 0; step < crossing_count(wires); ++step) {
    open.clear();
    for (int p = 1; p < wires; ++p) {
      if (order[p - 1] < order[p]) open.push_back(p);
    }
    const int p = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    std::swap(order[p - 1], order[p]);
    word.push_back(p);
  }
  return AffineArrangement::from_positions(wires, std::move(word));
}

namespace {

struct Scored {
  AffineArrangement arrangement;
  FaceStructure faces;
  int score;
};

Scored score(const AffineArrangement& a, bool projective) {
  auto fs = build_faces(a);
  const auto st = face_stats(fs);
  return {a, std::move(fs), st.triangles + (projective ? st.wedges : 0)};
}

}  // namespace

Record heuristic_search(const SearchConfig& config) {
  const int wires = wires_for(config);
  const bool projective = config.mode == Mode::Projective;
  const long long ceiling = bound(config.n, config.mode).value;
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto started = std::chrono::steady_clock::now();
  auto out_of_time = [&]() {
    if (config.time_limit_seconds <= 0) return false;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - started;
    return spent.count() > config.time_limit_seconds;
  };

  const int restarts = std::max(1, config.restarts);
  const long long per_restart = std::max<long long>(1, config.steps / restarts);
  std::optional<Scored> best;
  long long proposals = 0;
  std::vector<int> triangles;

  for (int r = 0; r < restarts && !out_of_time(); ++r) {
    Scored cur = score(random_arrangement(wires, rng), projective);
    for (long long step = 0; step < per_restart; ++step) {
      if (!best || cur.score > best->score) best = cur;
      if (best->score >= ceiling || ((step & 255) == 0 && out_of_time())) break;
      ++proposals;
      if (projective && unit(rng) < 0.1) {
        // Same projective arrangement seen from another line at infinity.
        const auto p = projectivize(cur.arrangement);
        const int label = std::uniform_int_distribution<int>(0, wires)(rng);
        cur = score(reroot(p, label), projective);
        continue;
      }
      triangles.clear();
      const auto& faces = cur.faces.faces();
      for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (faces[i].triangle && faces[i].bounded) triangles.push_back(i);
      }
      if (triangles.empty()) break;
      const int pick = triangles[std::uniform_int_distribution<std::size_t>(
          0, triangles.size() - 1)(rng)];
      Scored cand = score(flip(cur.arrangement, pick), projective);
      const double frac = static_cast<double>(step) / static_cast<double>(per_restart);
      const double temp = config.start_temperature *
                          std::pow(config.end_temperature / config.start_temperature, frac);
      const int delta = cand.score - cur.score;
      if (delta >= 0 || unit(rng) < std::exp(delta / temp)) cur = std::move(cand);
    }
    if (!best || cur.score > best->score) best = cur;
    if (config.progress) {
      config.progress("restart " + std::to_string(r + 1) + "/" + std::to_string(restarts) +
                      ", best " + std::to_string(best->score));
    }
    if (best->score >= ceiling) break;
  }

  Record rec;
  rec.n = config.n;
  rec.mode = config.mode;
  rec.max_triangles = best->score;
  rec.witness = normal_form(best->arrangement.word());
  rec.visited = proposals;
  rec.proof_status = ProofStatus::HeuristicBest;
  if (triangle_count(record_arrangement(rec)) != rec.max_triangles || rec.max_triangles > ceiling) {
    throw Error(ErrorCode::Internal, "heuristic witness fails its recount");
  }
  return rec;
}

std::optional<Arrangement> find_doubling_seed(int n, Mode mode, bool ignore_ceiling) {
  SearchConfig c;
  c.n = n;
  c.mode = mode;
  c.ignore_ceiling = ignore_ceiling;
  const auto kv = known_exact(n, mode);
  const long long target = kv.exact_max.value_or(bound(n, mode).value);
  std::optional<Arrangement> found;
  enumerate(c, [&](const CrossingWord& w) {
    if (found) return;
    Record r;
    r.n = n;
    r.mode = mode;
    r.witness = w;
    auto a = record_arrangement(r);
    if (triangle_count(a) == target && find_designated_line(a)) found = std::move(a);
  });
  return found;
}

ClaimReport verify_claim(int n, Mode mode, int threads, bool ignore_ceiling) {
  SearchConfig c;
  c.n = n;
  c.mode = mode;
  c.threads = threads;
  c.ignore_ceiling = ignore_ceiling;
  const auto kv = known_exact(n, mode);
  const long long b = bound(n, mode).value;
  c.prune_bound = static_cast<int>(kv.exact_max.value_or(b));

  ClaimReport rep;
  rep.record = max_triangles_exact(c);
  rep.bound = b;
  rep.known = kv.exact_max;
  rep.reached = rep.record.max_triangles == b;
  rep.gap = b - rep.record.max_triangles;
  rep.rough_gap = rough_bound(n, mode) - rep.record.max_triangles;
  rep.matches_known = !kv.exact_max || *kv.exact_max == rep.record.max_triangles;
  return rep;
}

}  // namespace pseudoline
