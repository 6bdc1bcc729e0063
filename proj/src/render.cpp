#include "pseudoline/render.hpp"

#include <cstdio>
#include <sstream>

#include "pseudoline/error.hpp"
#include "pseudoline/faces.hpp"

namespace pseudoline {

namespace {

struct Point {
  double x;
  double y;  // in track units, 0 = bottom wire
};

class Canvas {
 public:
  Canvas(const RenderOptions& o, int columns, int wires)
      : o_(o), sx_((o.width - 2 * kMargin) / static_cast<double>(columns + 1)),
        sy_((o.height - 2 * kMargin) / static_cast<double>(wires)) {}

  std::string xy(Point p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", kMargin + p.x * sx_,
                  o_.height - kMargin - (p.y + 0.5) * sy_);
    return buf;
  }

  std::string attr_xy(Point p, const char* xn, const char* yn) const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s=\"%.2f\" %s=\"%.2f\"", xn, kMargin + p.x * sx_, yn,
                  o_.height - kMargin - (p.y + 0.5) * sy_);
    return buf;
  }

  static constexpr double kMargin = 24.0;

 private:
  const RenderOptions& o_;
  double sx_;
  double sy_;
};

}  // namespace

std::string render_svg(const Arrangement& a, const RenderOptions& opts) {
  if (opts.width <= 0 || opts.height <= 0) {
    throw Error(ErrorCode::InvalidArgument, "render size must be positive");
  }
  const bool projective = std::holds_alternative<ProjectiveArrangement>(a);
  const AffineArrangement& part = projective
                                      ? std::get<ProjectiveArrangement>(a).affine_part()
                                      : std::get<AffineArrangement>(a);
  const FaceStructure fs = projective ? build_faces(std::get<ProjectiveArrangement>(a))
                                      : build_faces(part);
  const int m = part.lines();
  const auto& word = part.word();
  const int columns = static_cast<int>(word.size());
  const Canvas canvas(opts, columns, m);

  auto vertex_point = [&](int v) {
    const auto& vx = fs.vertices()[v];
    return Point{vx.column + 1.0, vx.position - 0.5};
  };

  // Wire w starts on track w and ends on track m-1-w.
  std::vector<std::vector<Point>> paths(m);
  for (int w = 0; w < m; ++w) paths[w].push_back({0.0, static_cast<double>(w)});
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  for (int c = 0; c < columns; ++c) {
    const int p = word[c];
    const Point x{c + 1.0, p - 0.5};
    paths[order[p - 1]].push_back(x);
    paths[order[p]].push_back(x);
    std::swap(order[p - 1], order[p]);
  }
  for (int w = 0; w < m; ++w) paths[w].push_back({columns + 1.0, m - 1.0 - w});

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width
     << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << " "
     << opts.height << "\">\n";
  os << "<style>.wire{fill:none;stroke:#222;stroke-width:1.5}"
        ".triangle{fill:#f4b942;fill-opacity:0.6;stroke:none}"
        ".unused{stroke:#c0392b;stroke-width:2.5;stroke-dasharray:5,4}"
        ".label{font:12px sans-serif;fill:#222}</style>\n";

  if (opts.shade_triangles) {
    const double left = 0.0;
    const double right = columns + 1.0;
    for (const auto& f : fs.faces()) {
      if (!f.triangle) continue;
      const int g = f.gap;
      const double below = g > 0 ? g - 1.0 : -0.5;
      const double above = g < m ? static_cast<double>(g) : m - 0.5;
      std::vector<Point> poly;
      if (f.open_vertex >= 0) {
        poly.push_back(vertex_point(f.open_vertex));
      } else {
        poly.push_back({left, below});
      }
      for (int v : f.lower_vertices) poly.push_back(vertex_point(v));
      if (f.close_vertex >= 0) {
        poly.push_back(vertex_point(f.close_vertex));
      } else {
        poly.push_back({right, below});
        poly.push_back({right, above});
      }
      for (auto it = f.upper_vertices.rbegin(); it != f.upper_vertices.rend(); ++it) {
        poly.push_back(vertex_point(*it));
      }
      if (f.open_vertex < 0) poly.push_back({left, above});
      os << "<polygon class=\"triangle\" points=\"";
      for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << canvas.xy(poly[i]);
      os << "\"/>\n";
    }
  }

  for (int w = 0; w < m; ++w) {
    os << "<polyline class=\"wire\" points=\"";
    for (std::size_t i = 0; i < paths[w].size(); ++i) {
      os << (i ? " " : "") << canvas.xy(paths[w][i]);
    }
    os << "\"/>\n";
  }

  if (opts.mark_unused) {
    // Affine: bounded segments only. Projective: every wire segment; the
    // segments of the line at infinity are not drawn.
    for (const auto& s : fs.segments()) {
      if (s.used || (!projective && !s.bounded)) continue;
      const int id = static_cast<int>(&s - fs.segments().data());
      if (id >= m * m) continue;
      const int w = id / m;
      const int i = id % m;
      const Point from = paths[w][i];
      const Point to = paths[w][i + 1];
      os << "<line class=\"unused\" " << canvas.attr_xy(from, "x1", "y1") << " "
         << canvas.attr_xy(to, "x2", "y2") << "/>\n";
    }
  }

  if (opts.show_labels) {
    for (int w = 0; w < m; ++w) {
      const int id = projective ? std::get<ProjectiveArrangement>(a).labels()[w] : w + 1;
      const Point at{-0.6, static_cast<double>(w)};
      os << "<text class=\"label\" " << canvas.attr_xy(at, "x", "y") << ">" << id
         << "</text>\n";
    }
    if (projective) {
      os << "<text class=\"label\" x=\"4\" y=\"14\">line at infinity: "
         << std::get<ProjectiveArrangement>(a).infinity_label() << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pseudoline
