#ifndef SKELBARY_EXPERIMENT_HPP
#define SKELBARY_EXPERIMENT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skelbary/generators.hpp"
#include "skelbary/solver.hpp"

namespace skelbary {

struct ExperimentSpec {
  GeneratorKind generator = GeneratorKind::Cube;
  int dim = 2;
  std::pair<int, int> n_range{1, 1};  // inclusive
  std::pair<int, int> k_range{1, 1};  // inclusive
  int trials = 1;
  std::uint64_t seed = 0;
  bool parallel = false;
  int threads = 0;
};

struct InstanceRow {
  std::string generator;
  int d = 0;
  int n = 0;
  int k = 0;
  std::string status;  // witness | infeasible | feasible_anomaly | violation
  std::uint64_t tuples_examined = 0;
  double phi_max_abs = 0.0;
  long elapsed_ms = 0;  // 0 in deterministic mode so reports are byte-stable
};

struct ExperimentReport {
  std::vector<InstanceRow> rows;
  long successes = 0;   // rows with the operation's expected outcome
  long failures = 0;    // legal but unexpected rows (e.g. probe anomalies)
  long violations = 0;  // theorem breaches; nonzero => exit status 1

  int exit_code() const { return violations > 0 ? 1 : 0; }
};

/// One decomposition instance of a sweep. Targets cycle with the trial
/// index: barycenter, then a seeded random interior point, then a seeded
/// random boundary point. random_hull regenerates the polytope per trial.
struct Instance {
  std::shared_ptr<const Polytope> polytope;
  Vec target;
};

Instance make_instance(const ExperimentSpec& spec, int n, int k, int trial);

/// decompose + check_witness + evaluate_phi over the (n, k, trial) grid.
/// Every (n, k) pair must satisfy k*n >= dim; violations make the exit
/// status nonzero.
ExperimentReport run_theorem_sweep(const ExperimentSpec& spec);

/// Runs decompose where k*n < dim on random interior targets and records
/// the infeasible/feasible split; every infeasible row rests on Farkas
/// certificates. Feasible draws are anomalies, not failures of the run.
ExperimentReport probe_infeasible(const ExperimentSpec& spec);

std::string to_csv(const ExperimentReport& report);
std::string summary_line(const ExperimentReport& report);

}  // namespace skelbary

#endif
