#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "pseudoline/crossing_word.hpp"

namespace pseudoline {

enum class Mode { Affine, Projective };

// Simple affine arrangement of n >= 3 pseudo-lines. Line ids are 1..n, the
// starting track of each wire.
class AffineArrangement {
 public:
  explicit AffineArrangement(CrossingWord word);
  static AffineArrangement from_positions(int lines, std::vector<int> positions);

  int lines() const noexcept { return word_.wires(); }
  const CrossingWord& word() const noexcept { return word_; }

  friend bool operator==(const AffineArrangement&, const AffineArrangement&) = default;

 private:
  CrossingWord word_;
};

// Simple projective arrangement of n >= 3 pseudo-lines, stored as an affine
// part of n-1 wires plus one designated line at infinity. Lines carry labels
// 0..n-1; `labels()[i]` names the affine wire starting on track i+1.
class ProjectiveArrangement {
 public:
  ProjectiveArrangement(AffineArrangement affine_part, std::vector<int> labels,
                        int infinity_label);

  int lines() const noexcept { return affine_.lines() + 1; }
  const AffineArrangement& affine_part() const noexcept { return affine_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int infinity_label() const noexcept { return infinity_; }
  bool has_line(int label) const noexcept;

  friend bool operator==(const ProjectiveArrangement&, const ProjectiveArrangement&) = default;

 private:
  AffineArrangement affine_;
  std::vector<int> labels_;
  int infinity_;
};

AffineArrangement triangle3();

AffineArrangement reflect_horizontal(const AffineArrangement& a);
AffineArrangement reflect_vertical(const AffineArrangement& a);

// Moves the cut on the circle at infinity past one unbounded face: the same
// affine arrangement swept from a neighbouring direction.
AffineArrangement rotate(const AffineArrangement& a);

// Affine part with the line at infinity labelled 0 and wires 1..n.
ProjectiveArrangement projectivize(const AffineArrangement& a);

// Same projective arrangement with `label` as the line at infinity. Returns
// the input unchanged when `label` is already at infinity. Throws
// Error{UnknownLine}.
ProjectiveArrangement reroot_projective(const ProjectiveArrangement& p, int label);

// Affine arrangement obtained by deleting `label` (putting it at infinity).
AffineArrangement reroot(const ProjectiveArrangement& p, int label);

// Removes one wire (1-based line id) from an affine arrangement.
AffineArrangement delete_line(const AffineArrangement& a, int line);

// The projective closure of the affine lines themselves, without adding a new
// line at infinity. Requires at least 3 lines.
ProjectiveArrangement as_projective_lines(const AffineArrangement& a);

enum class SymmetryGroup {
  None,        // commutation class only
  Affine,      // {id, reflect_h, reflect_v, both}
  Projective,  // every line at infinity, every cut, all reflections
};

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Smallest normal-form word over the group orbit.
CrossingWord canonical_word(const AffineArrangement& a, SymmetryGroup group);
CrossingWord canonical_word(const ProjectiveArrangement& p);

CanonicalKey canonical_key(const AffineArrangement& a, SymmetryGroup group);
CanonicalKey canonical_key(const ProjectiveArrangement& p);

AffineArrangement canonical_representative(const AffineArrangement& a, SymmetryGroup group);
ProjectiveArrangement canonical_representative(const ProjectiveArrangement& p);

}  // namespace pseudoline
