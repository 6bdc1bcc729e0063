#include "pseudoline/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pseudoline/error.hpp"

namespace pseudoline {

namespace {

[[noreturn]] void fail(ErrorCode code, int line, int col, const std::string& what) {
  throw Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

struct Token {
  std::string_view text;
  int col = 1;
};

// Splits on single spaces; empty tokens mark doubled or edge spaces.
std::vector<Token> split_tokens(std::string_view s, int line, ErrorCode code) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const auto sp = s.find(' ', start);
    const auto end = sp == std::string_view::npos ? s.size() : sp;
    if (end == start) fail(code, line, static_cast<int>(start) + 1, "unexpected space");
    out.push_back({s.substr(start, end - start), static_cast<int>(start) + 1});
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

int parse_int(const Token& t, int line, ErrorCode code) {
  int v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || t.text.empty()) {
    fail(code, line, t.col, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

}  // namespace

ParsedArr parse_arr(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  ParsedArr out{triangle3(), {}};
  std::size_t i = 0;
  for (; i < lines.size() && !lines[i].empty() && lines[i][0] == '#'; ++i) {
    auto body = lines[i].substr(1);
    if (!body.empty() && body[0] == ' ') body.remove_prefix(1);
    const auto eq = body.find('=');
    if (eq != std::string_view::npos) {
      out.comments[std::string(body.substr(0, eq))] = std::string(body.substr(eq + 1));
    }
  }
  const int header_line = static_cast<int>(i) + 1;
  if (i >= lines.size()) fail(ErrorCode::MalformedHeader, header_line, 1, "missing header");
  for (std::size_t k = i; k < lines.size(); ++k) {
    const auto cr = lines[k].find('\r');
    if (cr != std::string_view::npos) {
      fail(k == i ? ErrorCode::MalformedHeader : ErrorCode::MalformedBody,
           static_cast<int>(k) + 1, static_cast<int>(cr) + 1, "carriage return");
    }
  }

  const auto head = split_tokens(lines[i], header_line, ErrorCode::MalformedHeader);
  const bool affine = head[0].text == "affine";
  const bool projective = head[0].text == "projective";
  if (!affine && !projective) {
    fail(ErrorCode::MalformedHeader, header_line, 1,
         "expected 'affine' or 'projective', got '" + std::string(head[0].text) + "'");
  }
  const std::size_t want_tokens = affine ? 2 : 3;
  if (head.size() != want_tokens) {
    fail(ErrorCode::MalformedHeader, header_line, 1,
         "expected " + std::to_string(want_tokens) + " header fields");
  }
  const int n = parse_int(head[1], header_line, ErrorCode::MalformedHeader);
  int infinity = 0;
  if (projective) {
    const auto& tok = head[2];
    if (tok.text.substr(0, 9) != "infinity=") {
      fail(ErrorCode::MalformedHeader, header_line, tok.col, "expected infinity=<label>");
    }
    infinity = parse_int({tok.text.substr(9), tok.col + 9}, header_line,
                         ErrorCode::MalformedHeader);
    if (n < 1 || infinity < 0 || infinity >= n) {
      fail(ErrorCode::UnknownLine, header_line, tok.col + 9,
           "infinity label " + std::to_string(infinity) + " outside [0, " +
               std::to_string(n - 1) + "]");
    }
  }
  if (n < 3 || (projective && n < 4)) {
    fail(ErrorCode::TooFewLines, header_line, head[1].col,
         std::to_string(n) + " lines is below the minimum");
  }

  const int body_line = header_line + 1;
  if (i + 1 >= lines.size()) fail(ErrorCode::MalformedBody, body_line, 1, "missing positions");
  if (i + 2 < lines.size()) {
    fail(ErrorCode::MalformedBody, body_line + 1, 1, "unexpected content after positions");
  }
  std::vector<int> positions;
  for (const auto& tok : split_tokens(lines[i + 1], body_line, ErrorCode::MalformedBody)) {
    positions.push_back(parse_int(tok, body_line, ErrorCode::MalformedBody));
  }

  const int wires = affine ? n : n - 1;
  try {
    auto part = AffineArrangement::from_positions(wires, std::move(positions));
    if (affine) {
      out.arrangement = std::move(part);
    } else {
      std::vector<int> labels;
      for (int l = 0; l < n; ++l) {
        if (l != infinity) labels.push_back(l);
      }
      out.arrangement = ProjectiveArrangement(std::move(part), std::move(labels), infinity);
    }
  } catch (const Error& e) {
    std::string_view what = e.what();
    what.remove_prefix(std::min(what.size(), to_string(e.code()).size() + 2));
    throw Error(e.code(), std::to_string(body_line) + ":1: " + std::string(what));
  }
  return out;
}

Arrangement parse_arrangement(std::string_view text) { return parse_arr(text).arrangement; }

std::string emit_arr(const Arrangement& a) { return emit_arr(a, {}); }

std::string emit_arr(const Arrangement& a, const std::map<std::string, std::string>& comments) {
  std::ostringstream os;
  for (const auto& [k, v] : comments) os << "# " << k << "=" << v << "\n";
  const AffineArrangement* part = nullptr;
  if (const auto* aff = std::get_if<AffineArrangement>(&a)) {
    os << "affine " << aff->lines() << "\n";
    part = aff;
  } else {
    const auto& p = std::get<ProjectiveArrangement>(a);
    // Labels are implied by the infinity label; relabel to ascending order.
    std::vector<int> sorted = p.labels();
    std::sort(sorted.begin(), sorted.end());
    if (sorted != p.labels()) {
      throw Error(ErrorCode::InvalidArgument,
                  "projective wires must carry ascending labels to be written");
    }
    os << "projective " << p.lines() << " infinity=" << p.infinity_label() << "\n";
    part = &p.affine_part();
  }
  bool first = true;
  for (int pos : part->word().positions()) {
    if (!first) os << ' ';
    os << pos;
    first = false;
  }
  os << "\n";
  return os.str();
}

ParsedArr read_arr_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_arr(ss.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

namespace {

struct Summary {
  Mode mode;
  int lines;
  FaceStructure fs;
  FaceStats stats;
  UnusedReport unused;
};

Summary summarize(const Arrangement& a) {
  auto fs = std::visit([](const auto& x) { return build_faces(x); }, a);
  auto stats = face_stats(fs);
  auto unused = unused_segment_report(fs);
  return {mode_of(a), line_count(a), std::move(fs), std::move(stats), std::move(unused)};
}

}  // namespace

std::string stats_key_value(const Arrangement& a) {
  const auto s = summarize(a);
  std::ostringstream os;
  os << "mode=" << (s.mode == Mode::Affine ? "affine" : "projective") << "\n";
  os << "lines=" << s.lines << "\n";
  os << "faces=" << s.fs.faces().size() << "\n";
  os << "bounded_faces=" << s.fs.bounded_faces() << "\n";
  os << "unbounded_faces=" << s.fs.unbounded_faces() << "\n";
  os << "segments=" << s.fs.segments().size() << "\n";
  os << "bounded_segments=" << s.fs.bounded_segments() << "\n";
  os << "triangles=" << s.stats.triangles << "\n";
  os << "wedges=" << s.stats.wedges << "\n";
  os << "unused_segments=" << s.stats.unused_segments << "\n";
  os << "unused_unbounded=" << s.stats.unused_unbounded << "\n";
  for (const auto& [line, touch] : s.stats.per_line_triangle_touch) {
    os << "touch." << line << "=" << touch << "\n";
  }
  os << "unused=";
  bool first = true;
  for (int id : s.unused.segments) {
    const auto& seg = s.fs.segments()[id];
    os << (first ? "" : ",") << seg.line << ":" << seg.index;
    first = false;
  }
  os << "\n";
  return os.str();
}

std::string stats_json(const Arrangement& a) {
  const auto s = summarize(a);
  nlohmann::ordered_json j;
  j["mode"] = s.mode == Mode::Affine ? "affine" : "projective";
  j["lines"] = s.lines;
  j["faces"] = s.fs.faces().size();
  j["bounded_faces"] = s.fs.bounded_faces();
  j["unbounded_faces"] = s.fs.unbounded_faces();
  j["segments"] = s.fs.segments().size();
  j["bounded_segments"] = s.fs.bounded_segments();
  j["triangles"] = s.stats.triangles;
  j["wedges"] = s.stats.wedges;
  j["unused_segments"] = s.stats.unused_segments;
  j["unused_unbounded"] = s.stats.unused_unbounded;
  auto& touch = j["per_line_triangle_touch"] = nlohmann::ordered_json::object();
  for (const auto& [line, t] : s.stats.per_line_triangle_touch) touch[std::to_string(line)] = t;
  auto& unused = j["unused"] = nlohmann::ordered_json::array();
  for (int id : s.unused.segments) {
    const auto& seg = s.fs.segments()[id];
    unused.push_back({{"line", seg.line}, {"index", seg.index}});
  }
  return j.dump(2) + "\n";
}

}  // namespace pseudoline
