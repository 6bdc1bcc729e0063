#pragma once

#include <map>
#include <variant>
#include <vector>

#include "pseudoline/arrangement.hpp"

namespace pseudoline {

struct Vertex {
  int column = -1;    // index into the crossing word; -1 for points at infinity
  int position = 0;   // swap position, 0 for points at infinity
  int lines[2] = {0, 0};
};

struct Segment {
  int line = 0;
  int index = 0;      // 0-based order along the line
  int from = -1;      // vertex ids; -1 marks an unbounded end (affine only)
  int to = -1;
  bool bounded = true;
  bool used = false;  // edge of some triangle
};

struct Face {
  std::vector<int> edges;           // segment ids
  std::vector<int> lower_vertices;  // crossings along the lower chain, left to right
  std::vector<int> upper_vertices;
  int gap = 0;                      // 0 = below every wire, n = above
  int open_vertex = -1;             // -1 when unbounded to the left
  int close_vertex = -1;            // -1 when unbounded to the right
  bool bounded = true;              // projective faces are all bounded
  bool touches_infinity = false;    // unbounded in the affine part
  bool triangle = false;
};

// Planar subdivision of an arrangement. In projective mode the line at
// infinity contributes one vertex per affine wire and n-1 segments, and every
// unbounded affine face gains the L-infinity segment on its boundary.
class FaceStructure {
 public:
  Mode mode() const noexcept { return mode_; }
  int lines() const noexcept { return lines_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  // Line ids in this structure: 1..n affine, labels in projective mode.
  const std::vector<int>& line_ids() const noexcept { return line_ids_; }

  int bounded_faces() const;
  int unbounded_faces() const;
  int bounded_segments() const;

 private:
  friend FaceStructure build_faces(const AffineArrangement&);
  friend FaceStructure build_faces(const ProjectiveArrangement&);

  Mode mode_ = Mode::Affine;
  int lines_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Segment> segments_;
  std::vector<Face> faces_;
  std::vector<int> line_ids_;
};

struct FaceStats {
  int triangles = 0;
  int wedges = 0;               // unbounded faces bounded by two rays (affine part)
  int unused_segments = 0;      // bounded only (affine); all segments (projective)
  int unused_unbounded = 0;     // affine rays, always unused
  std::map<int, int> per_line_triangle_touch;
};

// Sweeps the word left to right tracking the open face in each of the n+1
// gaps between wires. Checks the region and segment counts for the mode and
// throws Error{Internal} if any fails.
FaceStructure build_faces(const AffineArrangement& a);
FaceStructure build_faces(const ProjectiveArrangement& p);

FaceStats face_stats(const FaceStructure& fs);

int count_triangles_affine(const AffineArrangement& a);
int wedge_count(const AffineArrangement& a);
int count_triangles_projective(const ProjectiveArrangement& p);

struct UnusedReport {
  int count = 0;                     // bounded (affine) or all (projective)
  std::vector<int> segments;         // ids counted in `count`
  std::vector<int> unbounded;        // affine rays
};

UnusedReport unused_segment_report(const FaceStructure& fs);

// Triangles with at least one edge on `line`. Throws Error{UnknownLine}.
int triangles_touching_line(const FaceStructure& fs, int line);
int triangles_touching_line(const AffineArrangement& a, int line);
int triangles_touching_line(const ProjectiveArrangement& p, int line);

struct PentagonSlack {
  int slack = 0;
};
struct PentagonFound {
  int face = -1;
};
// Triangle count meets the bound but the unused segments do not close up into
// a single pentagon. Never expected; reported instead of thrown.
struct PentagonMissing {
  int unused = 0;
};
using PentagonResult = std::variant<PentagonSlack, PentagonFound, PentagonMissing>;

// For n = 2 (mod 6) projective arrangements: slack to (n(n-1)-5)/3, or the
// pentagonal face bounded by the five unused segments when the bound is met.
// Throws Error{WrongResidue} for other n.
PentagonResult pentagon_check(const ProjectiveArrangement& p);

// True if some unused bounded segment on another line has an endpoint on
// `line` (the even-n affine property).
bool has_adjacent_unused_segment(const FaceStructure& fs, int line);

// Unused segments lying on `line`.
int unused_on_line(const FaceStructure& fs, int line);

}  // namespace pseudoline
