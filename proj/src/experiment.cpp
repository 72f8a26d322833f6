#include "linkforge/experiment.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "linkforge/hamiltonian.hpp"
#include "linkforge/reduction.hpp"
#include "linkforge/synthesis.hpp"

namespace linkforge {

namespace {

class Stopwatch {
 public:
  std::int64_t lap() {
    const auto now = std::chrono::steady_clock::now();
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count();
    last_ = now;
    return us;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream out;
  out << *v;
  return out.str();
}

void check_synthesized(ExperimentRecord& r, const ReductionMap& rm, const RectPolyline& poly) {
  const VerificationReport report = verify_polyline(poly, rm);
  r.synthesized_links = report.link_count;
  if (!report.all_ok()) {
    for (const auto& f : report.failures) r.violations.push_back("verify: " + f);
  }
  if (report.link_count != r.target_links() || report.merges != 0) {
    r.violations.push_back("verify: synthesized " + std::to_string(report.link_count) + " links with " +
                           std::to_string(report.merges) + " merges, expected " +
                           std::to_string(r.target_links()) + " with none");
  }
  // Every third vertex is a constructed point; the others are intermediate.
  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    if (k % 3 == 0) continue;
    for (const Point4& q : rm.points) {
      if (q.coords == poly.vertices[k]) {
        r.violations.push_back("synthesize: intermediate vertex " + std::to_string(k) + " is constructed point " +
                               std::to_string(q.source_label));
      }
    }
  }
}

void check_oracle(ExperimentRecord& r, const OracleResult& result) {
  r.oracle_min = result.min_links;
  r.oracle_merges = result.merges;
  r.certified = result.certified;
  r.explored = result.explored;
  if (!r.hamiltonian) r.order = result.order;
  const int target = r.target_links();
  if (result.certified != Certification::ExactWithinModel) {
    r.violations.push_back("oracle: node budget exhausted, minimum not certified");
    return;
  }
  if (r.hamiltonian && result.min_links != target) {
    r.violations.push_back("oracle: Hamiltonian grid but minimum is " + std::to_string(result.min_links) +
                           " links, not " + std::to_string(target));
  }
  if (!r.hamiltonian && result.min_links <= target) {
    r.violations.push_back("oracle: no Hamiltonian " + std::string(r.mode == Mode::Cycle ? "cycle" : "path") +
                           " but a " + std::to_string(result.min_links) + "-link witness exists (target " +
                           std::to_string(target) + ")");
  }
  if (r.hamming_bound) {
    const int bound = *r.hamming_bound;
    if (bound > result.min_links) {
      r.violations.push_back("oracle: Hamming bound " + std::to_string(bound) + " exceeds minimum " +
                             std::to_string(result.min_links) + " (witness has " + std::to_string(result.merges) +
                             " merges)");
    } else if (result.merges == 0 && bound != result.min_links) {
      r.violations.push_back("oracle: merge-free witness of " + std::to_string(result.min_links) +
                             " links but Hamming bound is " + std::to_string(bound));
    }
  }
}

}  // namespace

const char* mode_name(Mode mode) noexcept { return mode == Mode::Cycle ? "cycle" : "path"; }

Mode parse_mode(std::string_view text) {
  if (text == "cycle" || text == "tour") return Mode::Cycle;
  if (text == "path") return Mode::Path;
  throw std::invalid_argument("mode must be 'cycle' or 'path', got '" + std::string(text) + "'");
}

int ExperimentRecord::target_links() const noexcept {
  const int count = static_cast<int>(n);
  return mode == Mode::Cycle ? 3 * count : 3 * (count - 1);
}

ExperimentRecord run_roundtrip(const GridGraph& g, const RoundtripOptions& options) {
  ExperimentRecord r;
  r.grid = grid_id(g);
  r.n = g.n();
  r.m = g.m();
  r.mode = options.mode;
  Stopwatch clock;

  const ReductionMap rm = construct_points(g);
  r.elapsed.reduce_us = clock.lap();
  const PositionReport position = validate_position(rm);
  r.elapsed.validate_us = clock.lap();
  r.position_ok = position.ok;
  for (const auto& v : position.violations) {
    r.violations.push_back(std::string("validate: ") + violation_kind_name(v.kind) + " " + v.detail);
  }

  if (options.mode == Mode::Cycle) {
    if (g.n() < 4) {
      r.applicable = false;
      return r;
    }
    const auto cycle = find_hamiltonian_cycle(g);
    r.elapsed.ham_us = clock.lap();
    r.hamiltonian = cycle.has_value();
    if (cycle) {
      r.order = cycle->order;
      try {
        const RectPolyline tour = synthesize_tour(rm, *cycle);
        r.elapsed.synthesize_us = clock.lap();
        check_synthesized(r, rm, tour);
        r.elapsed.verify_us = clock.lap();
      } catch (const std::runtime_error& e) {
        r.violations.push_back(std::string("synthesize: ") + e.what());
      }
    }
    if (options.oracle && g.n() <= options.limits.max_points) {
      clock.lap();
      r.hamming_bound = cyclic_hamming_lower_bound(rm.points).value;
      check_oracle(r, min_link_tour(rm.points, options.limits));
      r.elapsed.oracle_us = clock.lap();
    }
    return r;
  }

  r.start = options.start;
  r.end = options.end;
  const auto path = find_hamiltonian_path(g, options.start, options.end);
  r.elapsed.ham_us = clock.lap();
  r.hamiltonian = path.has_value();
  if (path) {
    r.order = path->order;
    try {
      const RectPolyline poly = synthesize_path(rm, *path);
      r.elapsed.synthesize_us = clock.lap();
      check_synthesized(r, rm, poly);
      r.elapsed.verify_us = clock.lap();
    } catch (const std::runtime_error& e) {
      r.violations.push_back(std::string("synthesize: ") + e.what());
    }
  }
  if (options.oracle && g.n() <= options.limits.max_points) {
    clock.lap();
    check_oracle(r, min_link_path(rm.points, options.start, options.end, options.limits));
    r.elapsed.oracle_us = clock.lap();
  }
  return r;
}

std::string format_record(const ExperimentRecord& r) {
  std::ostringstream out;
  out << "linkforge-record/1"
      << " grid=" << r.grid << " n=" << r.n << " m=" << r.m << " mode=" << mode_name(r.mode);
  if (r.mode == Mode::Path) out << " start=" << r.start << " end=" << r.end;
  out << " applicable=" << (r.applicable ? 1 : 0) << " hamiltonian=" << (r.hamiltonian ? 1 : 0)
      << " position_ok=" << (r.position_ok ? 1 : 0) << " target=" << r.target_links()
      << " synthesized_links=" << opt_text(r.synthesized_links) << " oracle_min=" << opt_text(r.oracle_min)
      << " oracle_merges=" << opt_text(r.oracle_merges) << " hamming_bound=" << opt_text(r.hamming_bound)
      << " certified=" << (r.certified ? certification_name(*r.certified) : "-") << " explored=" << r.explored
      << " order=";
  if (r.order.empty()) out << '-';
  for (std::size_t k = 0; k < r.order.size(); ++k) out << (k ? "," : "") << r.order[k];
  out << " violations=" << r.violations.size() << " t_us=" << r.elapsed.reduce_us << ',' << r.elapsed.validate_us
      << ',' << r.elapsed.ham_us << ',' << r.elapsed.synthesize_us << ',' << r.elapsed.verify_us << ','
      << r.elapsed.oracle_us;
  return out.str();
}

SweepSummary run_sweep(const SweepOptions& options, const std::function<void(const ExperimentRecord&)>& on_record) {
  SweepSummary summary;
  RoundtripOptions rt;
  rt.mode = options.mode;
  rt.limits = options.limits;
  rt.limits.max_points = std::min(options.limits.max_points, options.oracle_cap);

  for (const EnumeratedGrid& item : enumerate_connected_grids(options.max_n, options.box)) {
    const GridGraph& g = item.graph;
    ++summary.grids;
    std::vector<std::pair<Label, Label>> endpoints;
    if (options.mode == Mode::Cycle) {
      endpoints.emplace_back(0, 0);
    } else if (g.n() == 1) {
      endpoints.emplace_back(1, 1);
    } else {
      for (Label s = 1; s <= static_cast<Label>(g.n()); ++s) {
        for (Label e = 1; e <= static_cast<Label>(g.n()); ++e) {
          if (s != e) endpoints.emplace_back(s, e);
        }
      }
    }
    for (auto [s, e] : endpoints) {
      rt.start = s;
      rt.end = e;
      rt.oracle = options.oracle && g.n() <= options.oracle_cap;
      ExperimentRecord r = run_roundtrip(g, rt);
      ++summary.records;
      if (!r.applicable) {
        ++summary.not_applicable;
      } else if (r.hamiltonian) {
        ++summary.hamiltonian;
      } else {
        ++summary.non_hamiltonian;
      }
      if (r.oracle_min) ++summary.oracle_runs;
      if (!r.ok()) ++summary.violations;
      if (on_record) on_record(r);
      if (!r.ok() && options.stop_on_violation) return summary;
    }
  }
  return summary;
}

std::string format_summary(const SweepSummary& s) {
  std::ostringstream out;
  out << "linkforge-summary/1 grids=" << s.grids << " records=" << s.records << " not_applicable=" << s.not_applicable
      << " hamiltonian=" << s.hamiltonian << " non_hamiltonian=" << s.non_hamiltonian
      << " oracle_runs=" << s.oracle_runs << " violations=" << s.violations;
  return out.str();
}

}  // namespace linkforge
