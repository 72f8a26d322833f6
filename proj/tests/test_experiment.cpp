#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sys/wait.h>

#include "linkforge/experiment.hpp"
#include "linkforge/svg.hpp"

using namespace linkforge;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LINKFORGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(LINKFORGE_DATA_DIR) + "/" + name; }

std::string field(const std::string& record, const std::string& key) {
  const std::string needle = " " + key + "=";
  const auto at = record.find(needle);
  if (at == std::string::npos) return "?";
  const auto begin = at + needle.size();
  return record.substr(begin, record.find_first_of(" \n", begin) - begin);
}

GridGraph grid_of(std::vector<std::pair<GridCoord, GridCoord>> raw) { return build_grid(raw); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "linkforge-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("roundtrip on a Hamiltonian grid") {
  RoundtripOptions options;
  options.oracle = true;
  options.limits.junctions = JunctionRule::TurnAtPoints;
  const ExperimentRecord r = run_roundtrip(grid_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}}), options);
  CHECK(r.applicable);
  CHECK(r.hamiltonian);
  CHECK(r.position_ok);
  CHECK(r.target_links() == 12);
  CHECK(r.synthesized_links == 12);
  CHECK(r.oracle_min == 12);
  CHECK(r.hamming_bound == 12);
  CHECK(r.certified == Certification::ExactWithinModel);
  CHECK(r.ok());

  const std::string line = format_record(r);
  CHECK(line.rfind("linkforge-record/1 grid=n4:1,1;1,2;2,1;2,2 n=4 m=4 mode=cycle ", 0) == 0);
  CHECK(field(line, "synthesized_links") == "12");
  CHECK(field(line, "oracle_min") == "12");
  CHECK(field(line, "order") == "1,2,4,3");
  CHECK(field(line, "violations") == "0");
}

TEST_CASE("roundtrip under merges reports the shortfall") {
  RoundtripOptions options;
  options.oracle = true;
  const ExperimentRecord r = run_roundtrip(grid_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}}), options);
  CHECK(r.synthesized_links == 12);
  CHECK(r.oracle_min == 10);
  CHECK(r.oracle_merges == 2);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.size() == 2);
}

TEST_CASE("roundtrip edge cases") {
  const ExperimentRecord small = run_roundtrip(grid_of({{1, 1}, {2, 1}, {3, 1}}), {});
  CHECK_FALSE(small.applicable);
  CHECK(small.ok());
  CHECK(field(format_record(small), "synthesized_links") == "-");

  RoundtripOptions path;
  path.mode = Mode::Path;
  path.start = 1;
  path.end = 2;
  path.oracle = true;
  path.limits.junctions = JunctionRule::TurnAtPoints;
  const ExperimentRecord none = run_roundtrip(grid_of({{1, 1}, {2, 1}, {3, 1}}), path);
  CHECK_FALSE(none.hamiltonian);
  CHECK(none.oracle_min == 7);
  CHECK(none.ok());
  CHECK(field(format_record(none), "start") == "1");

  CHECK(parse_mode("tour") == Mode::Cycle);
  CHECK(parse_mode("path") == Mode::Path);
  CHECK_THROWS_AS(parse_mode("loop"), std::invalid_argument);
}

TEST_CASE("sweeps") {
  SweepOptions cycles;
  cycles.max_n = 8;
  cycles.stop_on_violation = false;
  std::size_t seen = 0;
  const SweepSummary s = run_sweep(cycles, [&](const ExperimentRecord& r) {
    ++seen;
    CHECK(r.ok());
  });
  CHECK(s.grids == 150);
  CHECK(s.records == seen);
  CHECK(s.hamiltonian == 8);
  CHECK(s.violations == 0);
  CHECK(format_summary(s).rfind("linkforge-summary/1 grids=150 ", 0) == 0);

  SweepOptions turn;
  turn.max_n = 5;
  turn.mode = Mode::Path;
  turn.oracle = true;
  turn.limits.junctions = JunctionRule::TurnAtPoints;
  turn.stop_on_violation = false;
  const SweepSummary p = run_sweep(turn, [](const ExperimentRecord&) {});
  CHECK(p.violations == 0);
  CHECK(p.oracle_runs == p.records);

  SweepOptions merge = turn;
  merge.limits.junctions = JunctionRule::Merge;
  merge.stop_on_violation = true;
  const SweepSummary stopped = run_sweep(merge, [](const ExperimentRecord&) {});
  CHECK(stopped.violations == 1);
  CHECK(stopped.records < p.records);
}

TEST_CASE("svg rendering") {
  const GridGraph g = grid_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}});
  const std::string plain = render_svg(g);
  CHECK(plain == render_svg(g));
  CHECK(plain.find("<svg") != std::string::npos);
  std::size_t lines = 0, circles = 0;
  for (std::size_t at = 0; (at = plain.find("<line class=\"edge\"", at)) != std::string::npos; ++at) ++lines;
  for (std::size_t at = 0; (at = plain.find("<circle class=\"node\"", at)) != std::string::npos; ++at) ++circles;
  CHECK(lines == 4);
  CHECK(circles == 4);
  CHECK(plain.find("polygon") == std::string::npos);

  const std::string tour = render_svg(g, SvgOverlay{{1, 2, 4, 3}, true});
  CHECK(tour.find("<polygon class=\"tour\"") != std::string::npos);
  const std::string path = render_svg(g, SvgOverlay{{1, 2, 4}, false});
  CHECK(path.find("<polyline class=\"path\"") != std::string::npos);
}

TEST_CASE("command line") {
  SUBCASE("reduce reproduces the cycle-labeled square") {
    const Run r = run_cli("reduce " + data("square_cycle_labels.grid"));
    CHECK(r.status == 0);
    CHECK(r.out == "1 5 1 8 # 1\n2 5 2 6 # 2\n3 7 3 6 # 3\n4 7 4 8 # 4\n");
  }
  SUBCASE("reduce writes the point and edge-axis files") {
    const auto out = scratch("square.points");
    const Run r = run_cli("reduce " + data("square_cycle_labels.grid") + " --out " + out.string());
    CHECK(r.status == 0);
    std::ifstream points(out);
    std::string first;
    std::getline(points, first);
    CHECK(first == "1 5 1 8 # 1");
    CHECK(std::filesystem::exists(out.string() + ".map"));
  }
  SUBCASE("ham") {
    CHECK(run_cli("ham " + data("square.grid")).out == "1 2 4 3\n");
    CHECK(run_cli("ham " + data("plus.grid")).out == "NONE\n");
    CHECK(run_cli("ham " + data("line3.grid") + " --mode path --start 1 --end 3").out == "1 2 3\n");
  }
  SUBCASE("synthesize then verify") {
    const auto order = scratch("square.order");
    std::ofstream(order) << "1 2 4 3\n";
    const auto poly = scratch("square.poly");
    CHECK(run_cli("synthesize " + data("square.grid") + " " + order.string() + " --out " + poly.string()).status == 0);
    const Run v = run_cli("verify " + data("square.grid") + " " + poly.string());
    CHECK(v.status == 0);
    CHECK(v.out.find("link_count=12") != std::string::npos);

    std::ofstream(poly) << "open\n1 4 1 1\n5 4 1 1\n";
    const Run bad = run_cli("verify " + data("square.grid") + " " + poly.string());
    CHECK(bad.status == 1);
    CHECK(bad.out.find("covers_all=0") != std::string::npos);
  }
  SUBCASE("roundtrip golden square") {
    const Run r = run_cli("roundtrip " + data("square_cycle_labels.grid") + " --oracle --junctions turn");
    CHECK(r.status == 0);
    CHECK(r.out.find("synthesized_links=12 oracle_min=12") != std::string::npos);
  }
  SUBCASE("oracle") {
    const Run r = run_cli("oracle " + data("line3.grid") + " --mode path --start 1 --end 3");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("min_links=5 merges=1 certified=exact-within-model", 0) == 0);
  }
  SUBCASE("sweep") {
    const Run r = run_cli("sweep --max-n 4 --box 2x2 --oracle --junctions turn");
    CHECK(r.status == 0);
    CHECK(r.out.find("linkforge-summary/1 grids=") != std::string::npos);
  }
  SUBCASE("render") {
    const Run r = run_cli("render " + data("square.grid"));
    CHECK(r.status == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
  }
  SUBCASE("input errors exit with 2") {
    CHECK(run_cli("reduce /nonexistent/grid").status == 2);
    CHECK(run_cli("synthesize " + data("square.grid")).status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    const auto broken = scratch("broken.grid");
    std::ofstream(broken) << "1 1\n1 x\n";
    CHECK(run_cli("reduce " + broken.string()).status == 2);
    CHECK(run_cli("--help").status == 0);
  }
}
