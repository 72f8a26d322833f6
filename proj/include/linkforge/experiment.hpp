#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkforge/grid.hpp"
#include "linkforge/oracle.hpp"

namespace linkforge {

enum class Mode { Cycle, Path };

const char* mode_name(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

struct RoundtripOptions {
  Mode mode = Mode::Cycle;
  Label start = 0;  // path mode only
  Label end = 0;
  bool oracle = false;
  OracleLimits limits;
};

struct StageTimes {
  std::int64_t reduce_us = 0;
  std::int64_t validate_us = 0;
  std::int64_t ham_us = 0;
  std::int64_t synthesize_us = 0;
  std::int64_t verify_us = 0;
  std::int64_t oracle_us = 0;
};

// One reduce -> validate -> solve -> synthesize -> verify (-> oracle) run.
struct ExperimentRecord {
  std::string grid;
  std::size_t n = 0;
  std::size_t m = 0;
  Mode mode = Mode::Cycle;
  Label start = 0;
  Label end = 0;
  bool applicable = true;
  bool hamiltonian = false;
  bool position_ok = false;
  std::optional<int> synthesized_links;
  std::optional<int> oracle_min;
  std::optional<int> oracle_merges;
  std::optional<int> hamming_bound;  // cycle mode only
  std::optional<Certification> certified;
  std::uint64_t explored = 0;
  StageTimes elapsed;
  // Witness order of the solver, or of the oracle when the solver found none.
  std::vector<Label> order;
  std::vector<std::string> violations;  // "stage: message"

  bool ok() const noexcept { return violations.empty(); }

  // Links promised by the reduction: 3n for tours, 3(n - 1) for paths.
  int target_links() const noexcept;
};

// Runs the pipeline and checks, at this instance, that synthesis yields the
// target link count and that the oracle minimum equals the target exactly when
// the grid is Hamiltonian. Tours need n >= 4; smaller grids are recorded as not
// applicable. Property violations are collected, never thrown.
ExperimentRecord run_roundtrip(const GridGraph& g, const RoundtripOptions& options);

// Single-line machine-readable form, "linkforge-record/1" followed by
// space-separated key=value fields; absent optionals print as "-".
std::string format_record(const ExperimentRecord& r);

struct SweepOptions {
  std::size_t max_n = 6;
  GridBox box{3, 3};
  Mode mode = Mode::Cycle;
  bool oracle = false;
  std::size_t oracle_cap = 6;  // oracle runs only for n <= oracle_cap
  OracleLimits limits;
  bool stop_on_violation = true;
};

struct SweepSummary {
  std::size_t grids = 0;
  std::size_t records = 0;
  std::size_t not_applicable = 0;
  std::size_t hamiltonian = 0;
  std::size_t non_hamiltonian = 0;
  std::size_t oracle_runs = 0;
  std::size_t violations = 0;
};

// Runs run_roundtrip over enumerate_connected_grids in enumeration order; in
// path mode over every ordered (start, end) pair. on_record sees each record.
SweepSummary run_sweep(const SweepOptions& options, const std::function<void(const ExperimentRecord&)>& on_record);

std::string format_summary(const SweepSummary& s);

}  // namespace linkforge
