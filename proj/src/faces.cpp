#include "pseudoline/faces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pseudoline/error.hpp"

namespace pseudoline {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Internal, std::string("face structure check failed: ") + what);
}

struct SweepResult {
  std::vector<Vertex> vertices;
  std::vector<Segment> segments;
  std::vector<Face> faces;
  std::vector<int> final_order;
  std::vector<int> left_face;   // initial face per gap
  std::vector<int> right_face;  // face still open per gap at the end
};

// Segment ids are wire * n + index; every wire has n segments.
SweepResult sweep(const CrossingWord& word, std::span<const int> ids) {
  const int n = word.wires();
  SweepResult r;
  r.segments.resize(static_cast<std::size_t>(n) * n);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < n; ++i) {
      auto& s = r.segments[w * n + i];
      s.line = ids[w];
      s.index = i;
      s.bounded = i != 0 && i != n - 1;
    }
  }
  auto seg = [n](int wire, int index) { return wire * n + index; };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> cur(n, 0);
  std::vector<int> open(n + 1);
  for (int g = 0; g <= n; ++g) {
    Face f;
    f.gap = g;
    if (g > 0) f.edges.push_back(seg(order[g - 1], 0));
    if (g < n) f.edges.push_back(seg(order[g], 0));
    open[g] = static_cast<int>(r.faces.size());
    r.faces.push_back(std::move(f));
  }
  r.left_face = open;

  r.vertices.reserve(word.size());
  for (std::size_t col = 0; col < word.size(); ++col) {
    const int p = word[col];
    const int a = order[p - 1];
    const int b = order[p];
    const int v = static_cast<int>(r.vertices.size());
    Vertex vx;
    vx.column = static_cast<int>(col);
    vx.position = p;
    vx.lines[0] = ids[a];
    vx.lines[1] = ids[b];
    r.vertices.push_back(vx);

    r.faces[open[p]].close_vertex = v;
    r.segments[seg(a, cur[a])].to = v;
    r.segments[seg(b, cur[b])].to = v;
    ++cur[a];
    ++cur[b];
    r.segments[seg(a, cur[a])].from = v;
    r.segments[seg(b, cur[b])].from = v;
    std::swap(order[p - 1], order[p]);

    auto& below = r.faces[open[p - 1]];
    below.edges.push_back(seg(b, cur[b]));
    below.upper_vertices.push_back(v);
    auto& above = r.faces[open[p + 1]];
    above.edges.push_back(seg(a, cur[a]));
    above.lower_vertices.push_back(v);

    Face f;
    f.gap = p;
    f.open_vertex = v;
    f.edges = {seg(b, cur[b]), seg(a, cur[a])};
    open[p] = static_cast<int>(r.faces.size());
    r.faces.push_back(std::move(f));
  }
  r.right_face = open;
  r.final_order = order;
  for (auto& f : r.faces) {
    f.touches_infinity = f.open_vertex < 0 || f.close_vertex < 0;
    f.bounded = !f.touches_infinity;
  }
  return r;
}

void mark_usage(std::vector<Segment>& segments, const std::vector<Face>& faces, bool check_shared) {
  std::vector<int> hits(segments.size(), 0);
  for (const auto& f : faces) {
    if (!f.triangle) continue;
    for (int e : f.edges) {
      segments[e].used = true;
      ++hits[e];
    }
  }
  if (check_shared) {
    require(std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; }),
            "a segment edges two triangles");
  }
}

void check_incidence(const std::vector<Segment>& segments, const std::vector<Face>& faces) {
  std::vector<int> sides(segments.size(), 0);
  for (const auto& f : faces) {
    for (int e : f.edges) ++sides[e];
  }
  require(std::all_of(sides.begin(), sides.end(), [](int s) { return s == 2; }),
          "every segment borders exactly two faces");
}

}  // namespace

int FaceStructure::bounded_faces() const {
  return static_cast<int>(std::count_if(faces_.begin(), faces_.end(),
                                        [](const Face& f) { return f.bounded; }));
}

int FaceStructure::unbounded_faces() const {
  return static_cast<int>(faces_.size()) - bounded_faces();
}

int FaceStructure::bounded_segments() const {
  return static_cast<int>(std::count_if(segments_.begin(), segments_.end(),
                                        [](const Segment& s) { return s.bounded; }));
}

FaceStructure build_faces(const AffineArrangement& a) {
  const int n = a.lines();
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  auto r = sweep(a.word(), ids);
  for (auto& f : r.faces) f.triangle = f.bounded && f.edges.size() == 3;
  mark_usage(r.segments, r.faces, n >= 4);
  check_incidence(r.segments, r.faces);

  FaceStructure fs;
  fs.mode_ = Mode::Affine;
  fs.lines_ = n;
  fs.vertices_ = std::move(r.vertices);
  fs.segments_ = std::move(r.segments);
  fs.faces_ = std::move(r.faces);
  fs.line_ids_ = std::move(ids);

  require(static_cast<int>(fs.faces_.size()) == n * (n + 1) / 2 + 1, "affine face count");
  require(fs.bounded_faces() == n * (n - 3) / 2 + 1, "affine bounded face count");
  require(fs.unbounded_faces() == 2 * n, "affine unbounded face count");
  require(fs.bounded_segments() == n * (n - 2), "affine bounded segment count");
  return fs;
}

FaceStructure build_faces(const ProjectiveArrangement& p) {
  const int m = p.affine_part().lines();
  const int n = m + 1;
  auto r = sweep(p.affine_part().word(), p.labels());
  const int crossings = static_cast<int>(r.vertices.size());

  // Points at infinity, one per affine wire; both rays of a wire end there.
  for (int w = 0; w < m; ++w) {
    Vertex vx;
    vx.lines[0] = p.labels()[w];
    vx.lines[1] = p.infinity_label();
    r.vertices.push_back(vx);
    r.segments[w * m].from = crossings + w;
    r.segments[w * m + m - 1].to = crossings + w;
  }
  for (auto& s : r.segments) s.bounded = true;

  // Unbounded faces in circular order: bottom, right faces upward, top, left
  // faces downward. Faces i and i+m are separated by the same segment of the
  // line at infinity, which joins the ends of the wires around them.
  std::vector<int> ring(2 * m);
  ring[0] = r.left_face[0];
  for (int k = 1; k < m; ++k) ring[k] = r.right_face[k];
  ring[m] = r.left_face[m];
  for (int j = 1; j < m; ++j) ring[m + j] = r.left_face[m - j];
  std::vector<int> ends(2 * m + 1);
  ends[0] = 0;
  for (int k = 1; k <= m; ++k) ends[k] = r.final_order[k - 1];
  for (int j = 1; j <= m; ++j) ends[m + j] = m - j;

  const int first_inf = static_cast<int>(r.segments.size());
  for (int i = 0; i < m; ++i) {
    Segment s;
    s.line = p.infinity_label();
    s.index = i;
    s.from = crossings + ends[i];
    s.to = crossings + ends[i + 1];
    r.segments.push_back(s);
    r.faces[ring[i]].edges.push_back(first_inf + i);
    r.faces[ring[i + m]].edges.push_back(first_inf + i);
  }
  for (auto& f : r.faces) {
    f.bounded = true;
    f.triangle = f.edges.size() == 3;
  }
  mark_usage(r.segments, r.faces, n >= 4);
  check_incidence(r.segments, r.faces);

  FaceStructure fs;
  fs.mode_ = Mode::Projective;
  fs.lines_ = n;
  fs.vertices_ = std::move(r.vertices);
  fs.segments_ = std::move(r.segments);
  fs.faces_ = std::move(r.faces);
  fs.line_ids_ = p.labels();
  fs.line_ids_.push_back(p.infinity_label());
  std::sort(fs.line_ids_.begin(), fs.line_ids_.end());

  require(static_cast<int>(fs.faces_.size()) == n * (n - 1) / 2 + 1, "projective face count");
  require(static_cast<int>(fs.segments_.size()) == n * (n - 1), "projective segment count");
  return fs;
}

FaceStats face_stats(const FaceStructure& fs) {
  FaceStats st;
  for (int id : fs.line_ids()) st.per_line_triangle_touch[id] = 0;
  const auto& segs = fs.segments();
  for (const auto& f : fs.faces()) {
    const int affine_edges = static_cast<int>(f.edges.size()) -
                             (fs.mode() == Mode::Projective && f.touches_infinity ? 1 : 0);
    if (f.touches_infinity && affine_edges == 2) ++st.wedges;
    if (!f.triangle) continue;
    ++st.triangles;
    std::vector<int> touched;
    for (int e : f.edges) touched.push_back(segs[e].line);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int line : touched) ++st.per_line_triangle_touch[line];
  }
  for (const auto& s : segs) {
    if (s.used) continue;
    if (s.bounded) {
      ++st.unused_segments;
    } else {
      ++st.unused_unbounded;
    }
  }
  return st;
}

int count_triangles_affine(const AffineArrangement& a) { return face_stats(build_faces(a)).triangles; }

int wedge_count(const AffineArrangement& a) { return face_stats(build_faces(a)).wedges; }

int count_triangles_projective(const ProjectiveArrangement& p) {
  return face_stats(build_faces(p)).triangles;
}

UnusedReport unused_segment_report(const FaceStructure& fs) {
  UnusedReport rep;
  const auto& segs = fs.segments();
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    if (segs[i].used) continue;
    if (segs[i].bounded) {
      rep.segments.push_back(i);
    } else {
      rep.unbounded.push_back(i);
    }
  }
  rep.count = static_cast<int>(rep.segments.size());
  return rep;
}

int triangles_touching_line(const FaceStructure& fs, int line) {
  const auto& ids = fs.line_ids();
  if (std::find(ids.begin(), ids.end(), line) == ids.end()) {
    throw Error(ErrorCode::UnknownLine, "no line " + std::to_string(line));
  }
  int count = 0;
  for (const auto& f : fs.faces()) {
    if (!f.triangle) continue;
    const bool touches = std::any_of(f.edges.begin(), f.edges.end(), [&](int e) {
      return fs.segments()[e].line == line;
    });
    if (touches) ++count;
  }
  return count;
}

int triangles_touching_line(const AffineArrangement& a, int line) {
  return triangles_touching_line(build_faces(a), line);
}

int triangles_touching_line(const ProjectiveArrangement& p, int line) {
  return triangles_touching_line(build_faces(p), line);
}

PentagonResult pentagon_check(const ProjectiveArrangement& p) {
  const int n = p.lines();
  if (n % 6 != 2) {
    throw Error(ErrorCode::WrongResidue,
                "pentagon check needs n = 2 (mod 6), got n = " + std::to_string(n));
  }
  const auto fs = build_faces(p);
  const int bound = (n * (n - 1) - 5) / 3;
  const int triangles = face_stats(fs).triangles;
  if (triangles > bound) {
    throw Error(ErrorCode::Internal, "triangle count exceeds the n = 2 (mod 6) bound");
  }
  if (triangles < bound) return PentagonSlack{bound - triangles};

  auto unused = unused_segment_report(fs).segments;
  if (unused.size() == 5) {
    std::sort(unused.begin(), unused.end());
    const auto& faces = fs.faces();
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
      auto edges = faces[i].edges;
      std::sort(edges.begin(), edges.end());
      if (edges == unused) return PentagonFound{i};
    }
  }
  return PentagonMissing{static_cast<int>(unused.size())};
}

bool has_adjacent_unused_segment(const FaceStructure& fs, int line) {
  const auto& verts = fs.vertices();
  auto on_line = [&](int v) {
    return v >= 0 && (verts[v].lines[0] == line || verts[v].lines[1] == line);
  };
  return std::any_of(fs.segments().begin(), fs.segments().end(), [&](const Segment& s) {
    return s.bounded && !s.used && s.line != line && (on_line(s.from) || on_line(s.to));
  });
}

int unused_on_line(const FaceStructure& fs, int line) {
  return static_cast<int>(std::count_if(fs.segments().begin(), fs.segments().end(),
                                        [&](const Segment& s) { return s.line == line && !s.used; }));
}

}  // namespace pseudoline
