#include "pseudoline/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "pseudoline/error.hpp"

namespace pseudoline {

AffineArrangement::AffineArrangement(CrossingWord word) : word_(std::move(word)) {
  if (word_.wires() < 3) {
    throw Error(ErrorCode::TooFewLines,
                "an arrangement needs at least 3 lines, got " + std::to_string(word_.wires()));
  }
}

AffineArrangement AffineArrangement::from_positions(int lines, std::vector<int> positions) {
  return AffineArrangement(CrossingWord::validate(lines, std::move(positions)));
}

ProjectiveArrangement::ProjectiveArrangement(AffineArrangement affine_part,
                                             std::vector<int> labels, int infinity_label)
    : affine_(std::move(affine_part)), labels_(std::move(labels)), infinity_(infinity_label) {
  const int n = lines();
  if (static_cast<int>(labels_.size()) != n - 1) {
    throw Error(ErrorCode::InvalidArgument, "label count does not match the affine part");
  }
  std::vector<bool> seen(n, false);
  auto mark = [&](int label) {
    if (label < 0 || label >= n || seen[label]) {
      throw Error(ErrorCode::InvalidArgument,
                  "labels must be a permutation of 0.." + std::to_string(n - 1));
    }
    seen[label] = true;
  };
  for (int l : labels_) mark(l);
  mark(infinity_);
}

bool ProjectiveArrangement::has_line(int label) const noexcept {
  return label == infinity_ || std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

AffineArrangement triangle3() { return AffineArrangement::from_positions(3, {1, 2, 1}); }

AffineArrangement reflect_horizontal(const AffineArrangement& a) {
  auto pos = a.word().positions();
  return AffineArrangement::from_positions(a.lines(), std::vector<int>(pos.rbegin(), pos.rend()));
}

AffineArrangement reflect_vertical(const AffineArrangement& a) {
  const int n = a.lines();
  std::vector<int> out;
  out.reserve(a.word().size());
  for (int p : a.word().positions()) out.push_back(n - p);
  return AffineArrangement::from_positions(n, std::move(out));
}

namespace {

// Wire starting order after rotating, and the wire whose direction flips.
// The bottom-right end (the last wire) becomes the bottom-left end.
std::vector<int> rotated_start(int n) {
  std::vector<int> start(n);
  start[0] = n - 1;
  for (int i = 1; i < n; ++i) start[i] = i - 1;
  return start;
}

}  // namespace

AffineArrangement rotate(const AffineArrangement& a) {
  const int n = a.lines();
  auto seqs = local_sequences(a.word());
  std::reverse(seqs[n - 1].begin(), seqs[n - 1].end());
  const auto start = rotated_start(n);
  auto word = sweep_from_sequences(start, seqs);
  return AffineArrangement::from_positions(n, std::move(word));
}

ProjectiveArrangement projectivize(const AffineArrangement& a) {
  std::vector<int> labels(a.lines());
  std::iota(labels.begin(), labels.end(), 1);
  return ProjectiveArrangement(a, std::move(labels), 0);
}

ProjectiveArrangement reroot_projective(const ProjectiveArrangement& p, int label) {
  if (label == p.infinity_label()) return p;
  const auto& labels = p.labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw Error(ErrorCode::UnknownLine, "no line labelled " + std::to_string(label));
  }
  const int m = p.affine_part().lines();
  const int r = static_cast<int>(it - labels.begin());
  const int inf = m;  // index of the old line at infinity in the extended numbering
  const auto ls = local_sequences(p.affine_part().word());

  // The new sweep starts from a curve hugging `r` from above, cut just after
  // r's left end. Lines that cross r upward are followed forward, the others
  // backward; each sequence runs from r round through infinity back to r.
  std::vector<std::vector<int>> seqs(m + 1);
  for (int x = 0; x < m; ++x) {
    if (x == r) continue;
    const auto& s = ls[x];
    const auto j = static_cast<std::size_t>(std::find(s.begin(), s.end(), r) - s.begin());
    auto& out = seqs[x];
    if (x < r) {
      out.insert(out.end(), s.begin() + j + 1, s.end());
      out.push_back(inf);
      out.insert(out.end(), s.begin(), s.begin() + j);
    } else {
      out.insert(out.end(), s.rend() - j, s.rend());
      out.push_back(inf);
      out.insert(out.end(), s.rbegin(), s.rend() - j - 1);
    }
  }
  for (int x = r - 1; x >= 0; --x) seqs[inf].push_back(x);
  for (int x = m - 1; x > r; --x) seqs[inf].push_back(x);

  std::vector<int> start(ls[r].begin(), ls[r].end());
  start.push_back(inf);
  auto word = sweep_from_sequences(start, seqs);

  std::vector<int> new_labels;
  new_labels.reserve(m);
  for (int x : start) new_labels.push_back(x == inf ? p.infinity_label() : labels[x]);
  return ProjectiveArrangement(AffineArrangement::from_positions(m, std::move(word)),
                               std::move(new_labels), label);
}

AffineArrangement reroot(const ProjectiveArrangement& p, int label) {
  return reroot_projective(p, label).affine_part();
}

AffineArrangement delete_line(const AffineArrangement& a, int line) {
  const int n = a.lines();
  if (line < 1 || line > n) {
    throw Error(ErrorCode::UnknownLine, "no line " + std::to_string(line));
  }
  const int gone = line - 1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int track = gone;
  std::vector<int> out;
  for (int p : a.word().positions()) {
    const int lo = p - 1;
    if (order[lo] == gone) {
      track = p;
    } else if (order[p] == gone) {
      track = lo;
    } else {
      out.push_back(lo > track ? p - 1 : p);
    }
    std::swap(order[lo], order[p]);
  }
  return AffineArrangement::from_positions(n - 1, std::move(out));
}

ProjectiveArrangement as_projective_lines(const AffineArrangement& a) {
  if (a.lines() < 4) {
    throw Error(ErrorCode::TooFewLines, "projective closure needs at least 4 affine lines");
  }
  const auto rooted = reroot_projective(projectivize(a), 1);
  // The former line at infinity (label 0) is now an affine wire; drop it.
  const auto& labels = rooted.labels();
  const int wire = static_cast<int>(std::find(labels.begin(), labels.end(), 0) - labels.begin());
  auto part = delete_line(rooted.affine_part(), wire + 1);
  std::vector<int> kept;
  for (int l : labels) {
    if (l != 0) kept.push_back(l - 1);
  }
  return ProjectiveArrangement(std::move(part), std::move(kept), 0);
}

namespace {

CrossingWord min_over_reflections(const AffineArrangement& a, SymmetryGroup group) {
  CrossingWord best = normal_form(a.word());
  if (group == SymmetryGroup::None) return best;
  const auto h = reflect_horizontal(a);
  for (const auto& candidate : {h, reflect_vertical(a), reflect_vertical(h)}) {
    auto w = normal_form(candidate.word());
    if (w < best) best = std::move(w);
  }
  return best;
}

CanonicalKey key_from_word(const CrossingWord& w, Mode mode) {
  CanonicalKey key;
  key.bytes.reserve(w.size() + 2);
  key.bytes.push_back(mode == Mode::Affine ? 0 : 1);
  key.bytes.push_back(static_cast<std::uint8_t>(w.wires()));
  for (int p : w.positions()) key.bytes.push_back(static_cast<std::uint8_t>(p));
  return key;
}

}  // namespace

CrossingWord canonical_word(const AffineArrangement& a, SymmetryGroup group) {
  if (group == SymmetryGroup::Projective) return canonical_word(projectivize(a));
  return min_over_reflections(a, group);
}

CrossingWord canonical_word(const ProjectiveArrangement& p) {
  std::vector<int> all = p.labels();
  all.push_back(p.infinity_label());
  std::sort(all.begin(), all.end());

  const int m = p.affine_part().lines();
  std::optional<CrossingWord> best;
  for (int label : all) {
    auto part = reroot(p, label);
    // Rotations 0..m-1 with the four reflections give every cut and
    // orientation: m rotations equal a half turn.
    for (int k = 0; k < m; ++k) {
      auto w = min_over_reflections(part, SymmetryGroup::Affine);
      if (!best || w < *best) best = std::move(w);
      part = rotate(part);
    }
  }
  return *best;
}

CanonicalKey canonical_key(const AffineArrangement& a, SymmetryGroup group) {
  if (group == SymmetryGroup::Projective) return canonical_key(projectivize(a));
  return key_from_word(canonical_word(a, group), Mode::Affine);
}

CanonicalKey canonical_key(const ProjectiveArrangement& p) {
  return key_from_word(canonical_word(p), Mode::Projective);
}

AffineArrangement canonical_representative(const AffineArrangement& a, SymmetryGroup group) {
  return AffineArrangement(canonical_word(a, group));
}

ProjectiveArrangement canonical_representative(const ProjectiveArrangement& p) {
  return projectivize(AffineArrangement(canonical_word(p)));
}

}  // namespace pseudoline
