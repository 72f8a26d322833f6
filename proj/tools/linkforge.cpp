// linkforge: grid graph -> R^4 covering tour toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linkforge/errors.hpp"
#include "linkforge/experiment.hpp"
#include "linkforge/grid.hpp"
#include "linkforge/hamiltonian.hpp"
#include "linkforge/oracle.hpp"
#include "linkforge/reduction.hpp"
#include "linkforge/svg.hpp"
#include "linkforge/synthesis.hpp"

namespace {

using namespace linkforge;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

constexpr const char* kRecordHelp = R"(Machine-readable lines (roundtrip, sweep):
  linkforge-record/1 grid=ID n= m= mode=cycle|path [start= end=] applicable=0|1
    hamiltonian=0|1 position_ok=0|1 target=LINKS synthesized_links= oracle_min=
    oracle_merges= hamming_bound= certified=exact-within-model|bound-only|-
    explored=NODES order=L1,L2,...|- violations=COUNT t_us=REDUCE,VALIDATE,HAM,SYNTH,VERIFY,ORACLE
  linkforge-summary/1 grids= records= not_applicable= hamiltonian= non_hamiltonian=
    oracle_runs= violations=
Absent values print as '-'. Environment: LINKFORGE_NODE_BUDGET overrides the
oracle node budget (default 100000000).)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

GridGraph load_grid(const std::string& path) {
  try {
    return parse_grid(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()));
  }
}

OracleLimits limits_from(std::size_t cap, const std::string& junctions) {
  OracleLimits limits;
  limits.max_points = cap;
  if (const char* budget = std::getenv("LINKFORGE_NODE_BUDGET")) {
    limits.node_budget = std::stoull(budget);
  }
  if (junctions == "merge") {
    limits.junctions = JunctionRule::Merge;
  } else if (junctions == "turn") {
    limits.junctions = JunctionRule::TurnAtPoints;
  } else {
    throw std::invalid_argument("--junctions must be 'merge' or 'turn'");
  }
  return limits;
}

void print_report(const VerificationReport& r) {
  std::cout << "rectilinear=" << r.rectilinear << " simple=" << r.simple << " covers_all=" << r.covers_all
            << " per_link_coverage_ok=" << r.per_link_coverage_ok << " link_count=" << r.link_count
            << " merges=" << r.merges << '\n';
  for (const auto& f : r.failures) std::cout << "  " << f << '\n';
}

void print_record(const ExperimentRecord& r) {
  for (const auto& v : r.violations) std::cout << "  violation " << v << '\n';
  std::cout << format_record(r) << '\n';
}

struct Args {
  std::string grid;
  std::string order_file;
  std::string polyline_file;
  std::string out;
  std::string map_out;
  std::string mode = "cycle";
  std::string junctions = "merge";
  std::string box = "3x3";
  Label start = 0;
  Label end = 0;
  bool oracle = false;
  bool keep_going = false;
  std::size_t oracle_cap = 6;
  std::size_t max_n = 6;
};

void require_endpoints(const Args& a, const CLI::App* sub) {
  if (parse_mode(a.mode) == Mode::Path && (sub->count("--start") == 0 || sub->count("--end") == 0)) {
    throw std::invalid_argument("path mode requires --start and --end");
  }
}

int cmd_reduce(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  const ReductionMap rm = construct_points(g);
  write_output(a.out, format_points(rm));
  std::string map_path = a.map_out;
  if (map_path.empty() && !a.out.empty()) map_path = a.out + ".map";
  if (!map_path.empty()) write_output(map_path, format_edge_axis(rm));
  (a.out.empty() ? std::cerr : std::cout) << "n=" << g.n() << " m=" << g.m() << '\n';
  return 0;
}

int cmd_ham(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  std::optional<std::vector<Label>> order;
  if (parse_mode(a.mode) == Mode::Cycle) {
    if (auto c = find_hamiltonian_cycle(g)) order = c->order;
  } else {
    if (auto p = find_hamiltonian_path(g, a.start, a.end)) order = p->order;
  }
  write_output(a.out, format_order(order));
  return 0;
}

int cmd_synthesize(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  const auto order = parse_order(read_file(a.order_file));
  if (!order) throw std::invalid_argument(a.order_file + ": order file holds NONE");
  const ReductionMap rm = construct_points(g);
  const RectPolyline poly = parse_mode(a.mode) == Mode::Cycle ? synthesize_tour(rm, CycleOrder{*order})
                                                              : synthesize_path(rm, PathOrder{*order});
  write_output(a.out, format_polyline(poly));
  return 0;
}

int cmd_verify(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  const RectPolyline poly = parse_polyline(read_file(a.polyline_file));
  const VerificationReport report = verify_polyline(poly, construct_points(g));
  print_report(report);
  return report.all_ok() ? 0 : kExitViolation;
}

int cmd_oracle(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  const ReductionMap rm = construct_points(g);
  const OracleLimits limits = limits_from(a.oracle_cap, a.junctions);
  const Mode mode = parse_mode(a.mode);
  const OracleResult r =
      mode == Mode::Cycle ? min_link_tour(rm.points, limits) : min_link_path(rm.points, a.start, a.end, limits);
  std::cout << "min_links=" << r.min_links << " merges=" << r.merges
            << " certified=" << certification_name(r.certified) << " explored=" << r.explored;
  if (mode == Mode::Cycle) std::cout << " hamming_bound=" << cyclic_hamming_lower_bound(rm.points).value;
  std::cout << "\norder=" << format_order(r.order);
  if (!a.out.empty()) write_output(a.out, format_polyline(r.witness));
  return 0;
}

int cmd_roundtrip(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  RoundtripOptions options;
  options.mode = parse_mode(a.mode);
  options.start = a.start;
  options.end = a.end;
  options.oracle = a.oracle;
  options.limits = limits_from(a.oracle_cap, a.junctions);
  const ExperimentRecord r = run_roundtrip(g, options);
  std::cout << "grid " << r.grid << ": n=" << r.n << " m=" << r.m << " mode=" << mode_name(r.mode) << '\n';
  if (!r.applicable) std::cout << "  not applicable: tours need at least 4 points\n";
  print_record(r);
  return r.ok() ? 0 : kExitViolation;
}

int cmd_sweep(const Args& a) {
  SweepOptions options;
  options.max_n = a.max_n;
  options.box = parse_box(a.box);
  options.mode = parse_mode(a.mode);
  options.oracle = a.oracle;
  options.oracle_cap = a.oracle_cap;
  options.limits = limits_from(a.oracle_cap, a.junctions);
  options.stop_on_violation = !a.keep_going;
  const SweepSummary summary = run_sweep(options, print_record);
  std::cout << format_summary(summary) << '\n';
  return summary.violations == 0 ? 0 : kExitViolation;
}

int cmd_render(const Args& a) {
  const GridGraph g = load_grid(a.grid);
  std::optional<SvgOverlay> overlay;
  if (!a.order_file.empty()) {
    if (auto order = parse_order(read_file(a.order_file))) {
      overlay = SvgOverlay{*order, parse_mode(a.mode) == Mode::Cycle};
    }
  }
  write_output(a.out, render_svg(g, overlay));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduce grid graphs to minimum-link rectilinear covering tours in R^4."};
  app.footer(kRecordHelp);
  app.require_subcommand(1);
  Args a;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", a.mode, "cycle or path")->check(CLI::IsMember({"cycle", "path", "tour"}));
    sub->add_option("--start", a.start, "path start label");
    sub->add_option("--end", a.end, "path end label");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle-cap", a.oracle_cap, "largest point count handed to the oracle")->capture_default_str();
    sub->add_option("--junctions", a.junctions, "merge: straight links may pass through points; turn: forbid it")
        ->check(CLI::IsMember({"merge", "turn"}))
        ->capture_default_str();
  };

  auto* reduce = app.add_subcommand("reduce", "construct the R^4 points of a grid");
  reduce->add_option("grid", a.grid, "grid file")->required();
  reduce->add_option("--out", a.out, "points file (default stdout)");
  reduce->add_option("--map", a.map_out, "edge-axis map file (default OUT.map when --out is given)");

  auto* ham = app.add_subcommand("ham", "find a Hamiltonian cycle or path");
  ham->add_option("grid", a.grid, "grid file")->required();
  ham->add_option("--out", a.out, "order file (default stdout)");
  add_mode(ham);

  auto* synth = app.add_subcommand("synthesize", "build the 3-links-per-leg polyline for an order");
  synth->add_option("grid", a.grid, "grid file")->required();
  synth->add_option("order", a.order_file, "order file")->required();
  synth->add_option("--out", a.out, "polyline file (default stdout)");
  add_mode(synth);

  auto* verify = app.add_subcommand("verify", "check a polyline against the constructed points");
  verify->add_option("grid", a.grid, "grid file")->required();
  verify->add_option("polyline", a.polyline_file, "polyline file")->required();

  auto* oracle = app.add_subcommand("oracle", "exact minimum link count over staircase tours/paths");
  oracle->add_option("grid", a.grid, "grid file")->required();
  oracle->add_option("--out", a.out, "write the witness polyline here");
  add_mode(oracle);
  add_oracle(oracle);

  auto* roundtrip = app.add_subcommand("roundtrip", "run every stage on one grid and check the equivalence");
  roundtrip->add_option("grid", a.grid, "grid file")->required();
  roundtrip->add_flag("--oracle", a.oracle, "also run the exact oracle");
  add_mode(roundtrip);
  add_oracle(roundtrip);

  auto* sweep = app.add_subcommand("sweep", "roundtrip every connected grid in a box");
  sweep->add_option("--max-n", a.max_n, "largest point count")->capture_default_str();
  sweep->add_option("--box", a.box, "box of lattice points, WxH")->capture_default_str();
  sweep->add_flag("--oracle", a.oracle, "also run the exact oracle");
  sweep->add_flag("--keep-going", a.keep_going, "continue past violations");
  sweep->add_option("--mode", a.mode, "cycle or path")->check(CLI::IsMember({"cycle", "path", "tour"}));
  add_oracle(sweep);

  auto* render = app.add_subcommand("render", "draw a grid and optional order as SVG");
  render->add_option("grid", a.grid, "grid file")->required();
  render->add_option("order", a.order_file, "order file");
  render->add_option("--out", a.out, "SVG file (default stdout)");
  render->add_option("--mode", a.mode, "cycle or path")->check(CLI::IsMember({"cycle", "path", "tour"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*reduce) return cmd_reduce(a);
    if (*ham) {
      require_endpoints(a, ham);
      return cmd_ham(a);
    }
    if (*synth) return cmd_synthesize(a);
    if (*verify) return cmd_verify(a);
    if (*oracle) {
      require_endpoints(a, oracle);
      return cmd_oracle(a);
    }
    if (*roundtrip) {
      require_endpoints(a, roundtrip);
      return cmd_roundtrip(a);
    }
    if (*sweep) return cmd_sweep(a);
    if (*render) return cmd_render(a);
  } catch (const std::exception& e) {
    std::cerr << "linkforge: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
