// Command-line front end. Exit codes: 0 success or claim verified, 1 claim
// refuted or a construction missed its bound, 2 usage, parse or input error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pseudoline/bounds.hpp"
#include "pseudoline/constructions.hpp"
#include "pseudoline/error.hpp"
#include "pseudoline/faces.hpp"
#include "pseudoline/io.hpp"
#include "pseudoline/render.hpp"
#include "pseudoline/report.hpp"
#include "pseudoline/search.hpp"

using namespace pseudoline;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

const std::map<std::string, Mode> kModes{{"affine", Mode::Affine},
                                         {"projective", Mode::Projective}};
const std::map<std::string, SymmetryGroup> kGroups{{"none", SymmetryGroup::None},
                                                   {"affine", SymmetryGroup::Affine},
                                                   {"projective", SymmetryGroup::Projective}};

std::string default_seed_dir() {
  if (const char* env = std::getenv("PSEUDOLINE_SEEDS")) return env;
  return PSEUDOLINE_SEED_DIR;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SeedFailsBound:
    case ErrorCode::StageFailedBound:
    case ErrorCode::ConstructionSelfCheckFailed:
    case ErrorCode::Internal:
      return kRefuted;
    default:
      return kUsage;
  }
}

std::string pentagon_text(const ProjectiveArrangement& p) {
  const auto r = pentagon_check(p);
  if (const auto* s = std::get_if<PentagonSlack>(&r)) return "slack " + std::to_string(s->slack);
  if (const auto* f = std::get_if<PentagonFound>(&r)) return "found face " + std::to_string(f->face);
  return "missing (" + std::to_string(std::get<PentagonMissing>(r).unused) + " unused)";
}

std::map<std::string, std::string> record_comments(const Record& r) {
  return {{"count", std::to_string(r.max_triangles)},
          {"proof_status", std::string(to_string(r.proof_status))},
          {"visited", std::to_string(r.visited)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangles in simple arrangements of pseudo-lines"};
  app.require_subcommand(1);
  std::string seed_dir = default_seed_dir();
  app.add_option("--seeds", seed_dir, "Seed store directory")->capture_default_str();

  int rc = kOk;

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Polynomial bounds and known maxima");
  std::string bounds_mode = "affine";
  int bounds_from = 3;
  int bounds_to = 30;
  bool bounds_json = false;
  bounds_cmd->add_option("--mode", bounds_mode)->check(CLI::IsMember(kModes));
  bounds_cmd->add_option("--from", bounds_from)->check(CLI::Range(1, 1000000));
  bounds_cmd->add_option("--to", bounds_to)->check(CLI::Range(1, 1000000));
  bounds_cmd->add_flag("--json", bounds_json);
  bounds_cmd->callback([&]() {
    const Mode mode = kModes.at(bounds_mode);
    std::cout << (bounds_json ? bounds_table_json(mode, bounds_from, bounds_to)
                              : format_bounds_table(mode, bounds_from, bounds_to));
  });

  // count
  auto* count_cmd = app.add_subcommand("count", "Face statistics of an .arr file");
  std::string count_file;
  bool count_json = false;
  count_cmd->add_option("file", count_file)->required();
  count_cmd->add_flag("--json", count_json);
  count_cmd->callback([&]() {
    const auto a = read_arr_file(count_file).arrangement;
    std::cout << (count_json ? stats_json(a) : stats_key_value(a));
    if (!count_json) {
      if (const auto* p = std::get_if<ProjectiveArrangement>(&a); p && p->lines() % 6 == 2) {
        std::cout << "pentagon=" << pentagon_text(*p) << "\n";
      }
    }
  });

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a file's count against a claim, or search exhaustively for n lines");
  std::string verify_file;
  std::optional<int> verify_n;
  std::string verify_mode = "affine";
  std::optional<long long> verify_claimed;
  int verify_threads = 1;
  bool verify_ignore = false;
  verify_cmd->add_option("file", verify_file);
  verify_cmd->add_option("--n", verify_n);
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember(kModes));
  verify_cmd->add_option("--claimed", verify_claimed, "Asserted triangle count");
  verify_cmd->add_option("--threads", verify_threads)->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--ignore-ceiling", verify_ignore);
  verify_cmd->callback([&]() {
    if (!verify_file.empty()) {
      const auto a = read_arr_file(verify_file).arrangement;
      const int t = triangle_count(a);
      const int n = line_count(a);
      const long long b = bound(n, mode_of(a)).value;
      const long long claim = verify_claimed.value_or(b);
      std::cout << "lines=" << n << "\nmode=" << to_string(mode_of(a)) << "\ntriangles=" << t
                << "\nclaimed=" << claim << "\nbound=" << b << "\n";
      std::cout << "result=" << (t >= claim ? "verified" : "refuted") << "\n";
      if (t < claim) rc = kRefuted;
      return;
    }
    if (!verify_n) throw CLI::RequiredError("file or --n");
    const Mode vmode = kModes.at(verify_mode);
    const auto kv = known_exact(*verify_n, vmode);
    // Above the search ceiling a claim is judged against the table alone.
    if (verify_claimed && kv.exact_max && !verify_ignore &&
        *verify_n > feasibility_ceiling(vmode)) {
      const bool ok = consistent_with_known(*verify_n, vmode, *verify_claimed);
      std::cout << "lines=" << *verify_n << "\nmode=" << verify_mode
                << "\nclaimed=" << *verify_claimed << "\nknown=" << *kv.exact_max
                << "\nsource=table\n";
      if (!kv.note.empty()) std::cout << "note=" << kv.note << "\n";
      std::cout << "result=" << (ok ? "verified" : "refuted") << "\n";
      if (!ok) rc = kRefuted;
      return;
    }
    const auto rep = verify_claim(*verify_n, kModes.at(verify_mode), verify_threads, verify_ignore);
    std::cout << "lines=" << *verify_n << "\nmode=" << verify_mode
              << "\nmax=" << rep.record.max_triangles << "\nbound=" << rep.bound
              << "\nknown=" << (rep.known ? std::to_string(*rep.known) : "-")
              << "\nreached=" << (rep.reached ? "yes" : "no") << "\ngap=" << rep.gap
              << "\nrough_gap=" << rep.rough_gap
              << "\nmatches_known=" << (rep.matches_known ? "yes" : "no") << "\n";
    std::cout << "witness_positions=";
    for (std::size_t i = 0; i < rep.record.witness.size(); ++i) {
      std::cout << (i ? " " : "") << rep.record.witness[i];
    }
    std::cout << "\n";
    bool ok = rep.matches_known;
    if (verify_claimed) ok = ok && rep.record.max_triangles == *verify_claimed;
    std::cout << "result=" << (ok ? "verified" : "refuted") << "\n";
    if (!ok) rc = kRefuted;
  });

  // family
  auto* family_cmd = app.add_subcommand("family", "Build n = m*2^t + offset lines by doubling");
  int fam_m = 4;
  int fam_t = 0;
  int fam_offset = 1;
  std::string fam_mode = "affine";
  std::string fam_out;
  family_cmd->add_option("--m", fam_m)->required();
  family_cmd->add_option("--t", fam_t)->required();
  family_cmd->add_option("--offset", fam_offset)->check(CLI::IsMember({1, 2}));
  family_cmd->add_option("--mode", fam_mode)->check(CLI::IsMember(kModes));
  family_cmd->add_option("--out", fam_out, "Output .arr (default stdout)");
  family_cmd->callback([&]() {
    const auto res = family(fam_m, fam_t, fam_offset, kModes.at(fam_mode), SeedStore(seed_dir));
    for (const auto& st : res.stages) {
      std::cerr << "stage lines=" << st.lines << " step=" << st.step
                << " triangles=" << st.triangles << " bound=" << st.bound
                << " delta=" << st.delta << " unused=" << st.unused << "\n";
    }
    write_or_print(fam_out, emit_arr(res.arrangement,
                                     {{"count", std::to_string(triangle_count(res.arrangement))},
                                      {"provenance", "analytic"}}));
  });

  // double
  auto* double_cmd = app.add_subcommand("double", "Replace one line by a woven bundle");
  std::string dbl_file;
  std::optional<int> dbl_line;
  std::string dbl_out;
  double_cmd->add_option("file", dbl_file)->required();
  double_cmd->add_option("--line", dbl_line, "Designated line (default: smallest eligible)");
  double_cmd->add_option("--out", dbl_out);
  double_cmd->callback([&]() {
    const auto a = read_arr_file(dbl_file).arrangement;
    const auto line = dbl_line ? dbl_line : find_designated_line(a);
    if (!line) throw Error(ErrorCode::HypothesisNotMet, "no line meets the doubling hypothesis");
    const auto res = double_arrangement(make_plan(a, *line));
    std::cerr << "triangles " << res.triangles_before << " -> " << res.triangles_after
              << ", unused " << res.unused_before << " -> " << res.unused_after << "\n";
    write_or_print(dbl_out, emit_arr(res.output));
  });

  // far-line
  auto* far_cmd = app.add_subcommand("far-line", "Add a line beyond every crossing");
  std::string far_file;
  std::optional<int> far_side;
  std::string far_out;
  far_cmd->add_option("file", far_file)->required();
  far_cmd->add_option("--side", far_side, "Side in [0, 2n) (default: best)");
  far_cmd->add_option("--out", far_out);
  far_cmd->callback([&]() {
    const auto a = read_arr_file(far_file).arrangement;
    const auto* aff = std::get_if<AffineArrangement>(&a);
    if (!aff) throw Error(ErrorCode::InvalidArgument, "far-line needs an affine arrangement");
    const int side = far_side.value_or(best_far_line_side(*aff));
    const auto out = add_far_line(*aff, side);
    std::cerr << "side " << side << ": triangles " << count_triangles_affine(*aff) << " -> "
              << count_triangles_affine(out) << "\n";
    write_or_print(far_out, emit_arr(Arrangement(out)));
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "Exact or heuristic triangle maximisation");
  SearchConfig sc;
  std::string search_mode = "affine";
  std::string search_symmetry = "none";
  bool search_exact = false;
  bool search_heuristic = false;
  bool search_doubling_seed = false;
  bool search_store = false;
  std::string search_out;
  search_cmd->add_option("--n", sc.n)->required();
  search_cmd->add_option("--mode", search_mode)->check(CLI::IsMember(kModes));
  auto* ex = search_cmd->add_flag("--exact", search_exact);
  search_cmd->add_flag("--heuristic", search_heuristic)->excludes(ex);
  search_cmd->add_option("--budget", sc.steps, "Heuristic flip proposals");
  search_cmd->add_option("--restarts", sc.restarts)->check(CLI::Range(1, 1000000));
  search_cmd->add_option("--time-limit", sc.time_limit_seconds, "Heuristic seconds (0 = none)");
  search_cmd->add_option("--seed", sc.rng_seed, "Heuristic RNG seed");
  search_cmd->add_option("--threads", sc.threads)->check(CLI::Range(1, 256));
  search_cmd->add_option("--prune-bound", sc.prune_bound);
  search_cmd->add_option("--symmetry", search_symmetry)->check(CLI::IsMember(kGroups));
  search_cmd->add_flag("--ignore-ceiling", sc.ignore_ceiling);
  search_cmd->add_flag("--doubling-seed", search_doubling_seed,
                       "Exact: first maximum with a line fit for doubling");
  search_cmd->add_flag("--store", search_store, "Save the result in the seed store");
  search_cmd->add_option("--out", search_out, "Record .arr (default stdout)");
  search_cmd->callback([&]() {
    sc.mode = kModes.at(search_mode);
    sc.symmetry = kGroups.at(search_symmetry);
    sc.kind = search_heuristic ? SearchKind::Heuristic : SearchKind::Exact;
    if (sc.ignore_ceiling && sc.n > feasibility_ceiling(sc.mode)) {
      std::cerr << "warning: exact search above the feasibility ceiling\n";
    }
    sc.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };

    std::optional<Arrangement> result;
    std::map<std::string, std::string> comments;
    Provenance prov = Provenance::SearchDerived;
    if (search_doubling_seed) {
      result = find_doubling_seed(sc.n, sc.mode, sc.ignore_ceiling);
      if (!result) throw Error(ErrorCode::SeedUnavailable, "no maximal arrangement fits doubling");
      comments = {{"count", std::to_string(triangle_count(*result))},
                  {"proof_status", "exhaustive"}};
    } else {
      const Record r = sc.kind == SearchKind::Exact ? max_triangles_exact(sc) : heuristic_search(sc);
      result = record_arrangement(r);
      comments = record_comments(r);
    }
    write_or_print(search_out, emit_arr(*result, comments));
    if (search_store) {
      const SeedStore store(seed_dir);
      store.store({std::string(to_string(sc.mode)) + "/" + std::to_string(sc.n), *result, prov,
                   "proof_status " + comments["proof_status"]});
      std::cerr << "stored " << store.path_for(sc.mode, sc.n).string() << "\n";
    }
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG wiring diagram");
  std::string render_file;
  std::string render_out;
  RenderOptions ro;
  bool no_shade = false;
  bool no_unused = false;
  bool no_labels = false;
  render_cmd->add_option("file", render_file)->required();
  render_cmd->add_option("--out", render_out);
  render_cmd->add_option("--width", ro.width)->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", ro.height)->check(CLI::PositiveNumber);
  render_cmd->add_flag("--no-shade", no_shade);
  render_cmd->add_flag("--no-unused", no_unused);
  render_cmd->add_flag("--no-labels", no_labels);
  render_cmd->callback([&]() {
    ro.shade_triangles = !no_shade;
    ro.mark_unused = !no_unused;
    ro.show_labels = !no_labels;
    write_or_print(render_out, render_svg(read_arr_file(render_file).arrangement, ro));
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "Known maxima for small n with witnesses");
  int table_from = 3;
  int table_to = 30;
  bool table_json = false;
  table_cmd->add_option("--from", table_from)->check(CLI::Range(1, 1000));
  table_cmd->add_option("--to", table_to)->check(CLI::Range(1, 1000));
  table_cmd->add_flag("--json", table_json);
  table_cmd->callback([&]() {
    const auto rows = known_values_table(SeedStore(seed_dir), table_from, table_to);
    std::cout << (table_json ? known_values_json(rows) : format_known_values(rows));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
