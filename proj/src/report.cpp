#include "pseudoline/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pseudoline/error.hpp"

namespace pseudoline {

namespace {

std::string status_text(const TableRow& r) {
  switch (r.status) {
    case KnownStatus::Exact:
      if (!r.bound) return "exact";
      return r.reached ? "reached" : "not-reached";
    case KnownStatus::Open: return "open";
    case KnownStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string opt_text(const std::optional<long long>& v) { return v ? std::to_string(*v) : "-"; }

int min_lines(Mode mode) { return mode == Mode::Affine ? 3 : 4; }

std::string source_text(int n, Mode mode) {
  const auto kv = known_exact(n, mode);
  switch (kv.status) {
    case KnownStatus::Exact: return kv.reaches_bound ? "exact=bound" : "exact<bound";
    case KnownStatus::Open: return "open";
    case KnownStatus::Unknown: return "formula";
  }
  return "?";
}

}  // namespace

std::vector<TableRow> known_values_table(const SeedStore& store, int from, int to) {
  std::vector<TableRow> rows;
  for (Mode mode : {Mode::Affine, Mode::Projective}) {
    for (int n = from; n <= to; ++n) {
      const auto kv = known_exact(n, mode);
      TableRow r;
      r.n = n;
      r.mode = mode;
      r.bound = kv.bound;
      r.known = kv.exact_max;
      r.status = kv.status;
      r.reached = kv.reaches_bound;
      r.note = kv.note;
      if (n < min_lines(mode)) {
        r.note = "below the bound's range";
        if (!r.known) continue;
      }
      if (!store.root().empty() && r.known) {
        try {
          const auto s = store.find(mode, n);
          if (s && triangle_count(s->arrangement) == *r.known) r.witness = store.path_for(mode, n);
        } catch (const Error&) {
          // An unreadable seed file is not a witness.
        }
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string format_known_values(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%4s  %-10s  %6s  %6s  %-11s  %s\n", "n", "mode", "bound",
                "exact", "status", "witness/note");
  os << buf;
  for (const auto& r : rows) {
    std::string tail;
    if (r.witness) tail = r.witness->string();
    if (!r.note.empty()) tail += (tail.empty() ? "" : "; ") + r.note;
    std::snprintf(buf, sizeof buf, "%4d  %-10s  %6s  %6s  %-11s  ", r.n,
                  std::string(to_string(r.mode)).c_str(), opt_text(r.bound).c_str(),
                  opt_text(r.known).c_str(), status_text(r).c_str());
    std::string line = buf + tail;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string known_values_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["mode"] = to_string(r.mode);
    j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json();
    j["exact"] = r.known ? nlohmann::ordered_json(*r.known) : nlohmann::ordered_json();
    j["status"] = status_text(r);
    j["witness"] = r.witness ? nlohmann::ordered_json(r.witness->string())
                             : nlohmann::ordered_json();
    j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string format_bounds_table(Mode mode, int from, int to) {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%6s  %7s  %10s  %6s  %s\n", "n", "residue", "bound", "exact",
                "source");
  os << buf;
  for (int n = std::max(from, min_lines(mode)); n <= to; ++n) {
    const auto b = bound(n, mode);
    const auto kv = known_exact(n, mode);
    std::snprintf(buf, sizeof buf, "%6d  %7d  %10lld  %6s  %s\n", n, n % 6, b.value,
                  opt_text(kv.exact_max).c_str(), source_text(n, mode).c_str());
    os << buf;
  }
  return os.str();
}

std::string bounds_table_json(Mode mode, int from, int to) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int n = std::max(from, min_lines(mode)); n <= to; ++n) {
    const auto b = bound(n, mode);
    const auto kv = known_exact(n, mode);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["mode"] = to_string(mode);
    j["residue"] = n % 6;
    j["formula"] = to_string(b.formula);
    j["bound"] = b.value;
    j["exact"] = kv.exact_max ? nlohmann::ordered_json(*kv.exact_max) : nlohmann::ordered_json();
    j["source"] = source_text(n, mode);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace pseudoline
