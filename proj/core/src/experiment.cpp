#include "skelbary/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "skelbary/testmap.hpp"

namespace skelbary {

namespace {

void check_ranges(const ExperimentSpec& spec) {
  if (spec.n_range.first > spec.n_range.second ||
      spec.k_range.first > spec.k_range.second)
    throw std::invalid_argument("empty n or k range");
  if (spec.n_range.first < 1 || spec.k_range.first < 1)
    throw std::invalid_argument("n and k must be >= 1");
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
}

long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Instance make_instance(const ExperimentSpec& spec, int n, int k, int trial) {
  const std::uint64_t inst_seed =
      mix_seed(spec.seed, static_cast<std::uint64_t>(spec.generator),
               static_cast<std::uint64_t>(spec.dim),
               static_cast<std::uint64_t>(n) << 16 | static_cast<std::uint64_t>(k),
               static_cast<std::uint64_t>(trial));
  auto poly = std::make_shared<const Polytope>(
      generate(spec.generator, spec.dim, inst_seed));

  Rng rng(mix_seed(inst_seed, 0x7a6765747321ULL));
  Vec target;
  switch (trial % 3) {
    case 0: target = vertex_centroid(*poly); break;
    case 1: target = random_interior_point(*poly, rng); break;
    default: target = random_boundary_point(*poly, rng); break;
  }
  return Instance{std::move(poly), std::move(target)};
}

ExperimentReport run_theorem_sweep(const ExperimentSpec& spec) {
  check_ranges(spec);
  for (int n = spec.n_range.first; n <= spec.n_range.second; ++n)
    for (int k = spec.k_range.first; k <= spec.k_range.second; ++k)
      if (k * n < spec.dim)
        throw std::invalid_argument(
            "theorem sweep requires k*n >= dim for every pair in range");

  ExperimentReport report;
  SolveOptions options;
  options.parallel = spec.parallel;
  options.threads = spec.threads;

  for (int n = spec.n_range.first; n <= spec.n_range.second; ++n) {
    for (int k = spec.k_range.first; k <= spec.k_range.second; ++k) {
      for (int trial = 0; trial < spec.trials; ++trial) {
        Instance inst = make_instance(spec, n, k, trial);
        InstanceRow row;
        row.generator = to_string(spec.generator);
        row.d = spec.dim;
        row.n = n;
        row.k = k;

        const auto start = std::chrono::steady_clock::now();
        try {
          DecompositionRequest req =
              DecompositionRequest::homogeneous(inst.polytope, inst.target, n, k);
          auto result = decompose(req, options);
          if (auto* w = std::get_if<DecompositionWitness>(&result)) {
            row.tuples_examined = w->tuples_examined;
            if (check_witness(req, *w)) {
              row.status = "witness";
              row.phi_max_abs =
                  evaluate_phi(w->points, *inst.polytope, k).phi_max_abs;
              ++report.successes;
            } else {
              row.status = "violation";
              ++report.violations;
            }
          } else {
            // k*n >= dim makes exhaustion a theorem breach.
            row.tuples_examined =
                std::get<InfeasibilityReport>(result).tuples_examined;
            row.status = "violation";
            ++report.violations;
          }
        } catch (const std::logic_error&) {
          row.status = "violation";
          ++report.violations;
        }
        if (spec.parallel) row.elapsed_ms = elapsed_ms_since(start);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

ExperimentReport probe_infeasible(const ExperimentSpec& spec) {
  check_ranges(spec);
  for (int n = spec.n_range.first; n <= spec.n_range.second; ++n)
    for (int k = spec.k_range.first; k <= spec.k_range.second; ++k)
      if (k * n >= spec.dim)
        throw std::invalid_argument(
            "infeasibility probe requires k*n < dim for every pair in range");

  ExperimentReport report;
  SolveOptions options;
  options.parallel = spec.parallel;
  options.threads = spec.threads;

  for (int n = spec.n_range.first; n <= spec.n_range.second; ++n) {
    for (int k = spec.k_range.first; k <= spec.k_range.second; ++k) {
      for (int trial = 0; trial < spec.trials; ++trial) {
        const std::uint64_t inst_seed =
            mix_seed(spec.seed, static_cast<std::uint64_t>(spec.generator),
                     static_cast<std::uint64_t>(spec.dim),
                     static_cast<std::uint64_t>(n) << 16 | static_cast<std::uint64_t>(k),
                     static_cast<std::uint64_t>(trial));
        auto poly = std::make_shared<const Polytope>(
            generate(spec.generator, spec.dim, inst_seed));
        Rng rng(mix_seed(inst_seed, 0x696e742121ULL));
        Vec target = random_interior_point(*poly, rng);

        InstanceRow row;
        row.generator = to_string(spec.generator);
        row.d = spec.dim;
        row.n = n;
        row.k = k;

        const auto start = std::chrono::steady_clock::now();
        DecompositionRequest req =
            DecompositionRequest::homogeneous(poly, target, n, k);
        auto result = decompose(req, options);
        if (auto* rep = std::get_if<InfeasibilityReport>(&result)) {
          row.tuples_examined = rep->tuples_examined;
          if (rep->all_certified) {
            row.status = "infeasible";
            ++report.successes;
          } else {
            row.status = "violation";  // report without certificates: defect
            ++report.violations;
          }
        } else {
          auto& w = std::get<DecompositionWitness>(result);
          row.tuples_examined = w.tuples_examined;
          row.status = check_witness(req, w) ? "feasible_anomaly" : "violation";
          if (row.status == "feasible_anomaly")
            ++report.failures;  // logged, not a failure of the probe
          else
            ++report.violations;
        }
        if (spec.parallel) row.elapsed_ms = elapsed_ms_since(start);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "generator,d,n,k,status,tuples_examined,phi_max_abs,elapsed_ms\n";
  char buf[256];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%s,%llu,%.17g,%ld\n",
                  r.generator.c_str(), r.d, r.n, r.k, r.status.c_str(),
                  static_cast<unsigned long long>(r.tuples_examined),
                  r.phi_max_abs, r.elapsed_ms);
    out += buf;
  }
  return out;
}

std::string summary_line(const ExperimentReport& report) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "successes=%ld failures=%ld violations=%ld",
                report.successes, report.failures, report.violations);
  return buf;
}

}  // namespace skelbary
