// Command-line front end: polytope builds, skeleton barycenter
// decompositions, the theorem sweep, the infeasibility probe, the test
// map, and the face-dimension inequality check.
//
// Exit codes: 0 success, 1 theorem violation, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "skelbary/experiment.hpp"
#include "skelbary/json_io.hpp"
#include "skelbary/solver.hpp"
#include "skelbary/testmap.hpp"

namespace {

using namespace skelbary;

struct PolytopeSource {
  std::string file;
  std::string generator;
  int dim = 0;
  std::uint64_t seed = 0;

  std::shared_ptr<const Polytope> load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      nlohmann::json j;
      in >> j;
      return std::make_shared<const Polytope>(polytope_from_json(j));
    }
    if (generator.empty())
      throw std::invalid_argument("need --polytope or --generator with --dim");
    return std::make_shared<const Polytope>(
        generate(parse_generator(generator), dim, seed));
  }
};

void add_source_flags(CLI::App* cmd, PolytopeSource& src) {
  cmd->add_option("--polytope", src.file, "polytope JSON file");
  cmd->add_option("--generator", src.generator,
                  "simplex|cube|cross_polytope|random_hull");
  cmd->add_option("--dim", src.dim, "generator dimension");
  cmd->add_option("--seed", src.seed, "seed for random generation");
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::vector<Part> parse_parts(const std::string& text) {
  std::vector<Part> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("parts must look like k:weight,k:weight,...");
    Part p;
    p.skeleton_dim = std::stoi(tok.substr(0, colon));
    p.weight = parse_rational(tok.substr(colon + 1));
    parts.push_back(std::move(p));
  }
  if (parts.empty()) throw std::invalid_argument("empty parts list");
  return parts;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Barycenter decompositions on polytope skeletons"};
  app.require_subcommand(1);

  // build
  auto* build_cmd = app.add_subcommand("build", "build a polytope and print a lattice summary");
  PolytopeSource build_src;
  std::string build_out;
  add_source_flags(build_cmd, build_src);
  build_cmd->add_option("--out", build_out, "output file (default stdout)");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "find skeleton points with a prescribed barycenter");
  PolytopeSource dec_src;
  std::string dec_point, dec_parts, dec_strategy = "direct", dec_out;
  int dec_n = 0, dec_k = 0, dec_threads = 0;
  bool dec_parallel = false;
  add_source_flags(dec_cmd, dec_src);
  dec_cmd->add_option("--point", dec_point, "target point, e.g. \"1/2,0\"")->required();
  dec_cmd->add_option("--n", dec_n, "number of points");
  dec_cmd->add_option("--k", dec_k, "skeleton dimension");
  dec_cmd->add_option("--parts", dec_parts, "heterogeneous parts k:weight,...");
  dec_cmd->add_option("--strategy", dec_strategy, "direct|factored");
  dec_cmd->add_flag("--parallel", dec_parallel, "parallel tuple search (nondeterministic witness)");
  dec_cmd->add_option("--threads", dec_threads, "worker threads (default: hardware)");
  dec_cmd->add_option("--out", dec_out, "output file (default stdout)");

  // verify-theorem
  auto* ver_cmd = app.add_subcommand("verify-theorem", "sweep decompose+check over an (n,k) grid");
  std::string ver_gen = "cube", ver_n = "1:1", ver_k = "1:1", ver_out;
  int ver_dim = 2, ver_trials = 1, ver_threads = 0;
  std::uint64_t ver_seed = 0;
  bool ver_parallel = false;
  ver_cmd->add_option("--generator", ver_gen, "simplex|cube|cross_polytope|random_hull");
  ver_cmd->add_option("--dim", ver_dim, "polytope dimension");
  ver_cmd->add_option("--n", ver_n, "n range, e.g. 2:4");
  ver_cmd->add_option("--k", ver_k, "k range, e.g. 1:3");
  ver_cmd->add_option("--trials", ver_trials, "trials per (n,k); targets cycle barycenter/interior/boundary");
  ver_cmd->add_option("--seed", ver_seed, "sweep seed");
  ver_cmd->add_flag("--parallel", ver_parallel, "parallel tuple search");
  ver_cmd->add_option("--threads", ver_threads, "worker threads");
  ver_cmd->add_option("--out", ver_out, "CSV output file (default stdout)");

  // probe-infeasible
  auto* probe_cmd = app.add_subcommand("probe-infeasible", "certify infeasibility where k*n < dim");
  std::string probe_gen = "random_hull", probe_n = "2:2", probe_k = "1:1", probe_out;
  int probe_dim = 3, probe_trials = 1, probe_threads = 0;
  std::uint64_t probe_seed = 0;
  bool probe_parallel = false;
  probe_cmd->add_option("--generator", probe_gen, "simplex|cube|cross_polytope|random_hull");
  probe_cmd->add_option("--dim", probe_dim, "polytope dimension");
  probe_cmd->add_option("--n", probe_n, "n range");
  probe_cmd->add_option("--k", probe_k, "k range");
  probe_cmd->add_option("--trials", probe_trials, "trials per (n,k)");
  probe_cmd->add_option("--seed", probe_seed, "probe seed");
  probe_cmd->add_flag("--parallel", probe_parallel, "parallel tuple search");
  probe_cmd->add_option("--threads", probe_threads, "worker threads");
  probe_cmd->add_option("--out", probe_out, "CSV output file (default stdout)");

  // testmap
  auto* tm_cmd = app.add_subcommand("testmap", "evaluate skeleton distances and their mean-free projection");
  PolytopeSource tm_src;
  std::vector<std::string> tm_points;
  std::string tm_witness, tm_out;
  int tm_k = 1;
  add_source_flags(tm_cmd, tm_src);
  tm_cmd->add_option("--k", tm_k, "skeleton dimension");
  tm_cmd->add_option("--point", tm_points, "tuple point (repeatable)");
  tm_cmd->add_option("--witness", tm_witness, "witness JSON file; its points form the tuple");
  tm_cmd->add_option("--out", tm_out, "output file (default stdout)");

  // dim-check
  auto* dim_cmd = app.add_subcommand("dim-check", "verify the face-dimension inequality over all big-face tuples");
  PolytopeSource dim_src;
  std::string dim_out;
  int dim_n = 2, dim_k = 1;
  add_source_flags(dim_cmd, dim_src);
  dim_cmd->add_option("--n", dim_n, "number of factors")->required();
  dim_cmd->add_option("--k", dim_k, "skeleton dimension")->required();
  dim_cmd->add_option("--out", dim_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (build_cmd->parsed()) {
    auto poly = build_src.load();
    emit(build_out, lattice_summary(*poly).dump(2));
    return 0;
  }

  if (dec_cmd->parsed()) {
    auto poly = dec_src.load();
    DecompositionRequest req;
    req.polytope = poly;
    req.target = parse_point(dec_point);
    if (!dec_parts.empty())
      req.parts = parse_parts(dec_parts);
    else if (dec_n >= 1)
      req.parts.assign(static_cast<std::size_t>(dec_n),
                       Part{dec_k, Rational(1) / dec_n});
    else
      throw std::invalid_argument("need --n/--k or --parts");

    SolveOptions options;
    if (dec_strategy == "factored")
      options.strategy = Strategy::Factored;
    else if (dec_strategy != "direct")
      throw std::invalid_argument("unknown strategy: " + dec_strategy);
    options.parallel = dec_parallel;
    options.threads = dec_threads;

    auto result = decompose(req, options);
    if (auto* w = std::get_if<DecompositionWitness>(&result)) {
      if (!check_witness(req, *w))
        throw std::logic_error("witness failed verification");
      emit(dec_out, witness_to_json(*w).dump(2));
    } else {
      emit(dec_out, infeasibility_to_json(std::get<InfeasibilityReport>(result)).dump(2));
    }
    return 0;
  }

  if (ver_cmd->parsed() || probe_cmd->parsed()) {
    const bool probe = probe_cmd->parsed();
    ExperimentSpec spec;
    spec.generator = parse_generator(probe ? probe_gen : ver_gen);
    spec.dim = probe ? probe_dim : ver_dim;
    spec.n_range = parse_range(probe ? probe_n : ver_n);
    spec.k_range = parse_range(probe ? probe_k : ver_k);
    spec.trials = probe ? probe_trials : ver_trials;
    spec.seed = probe ? probe_seed : ver_seed;
    spec.parallel = probe ? probe_parallel : ver_parallel;
    spec.threads = probe ? probe_threads : ver_threads;

    ExperimentReport report =
        probe ? probe_infeasible(spec) : run_theorem_sweep(spec);
    emit(probe ? probe_out : ver_out, to_csv(report));
    std::cerr << summary_line(report) << "\n";
    return report.exit_code();
  }

  if (tm_cmd->parsed()) {
    auto poly = tm_src.load();
    std::vector<Vec> points;
    if (!tm_witness.empty()) {
      std::ifstream in(tm_witness);
      if (!in) throw std::invalid_argument("cannot open " + tm_witness);
      nlohmann::json j;
      in >> j;
      points = points_from_witness_json(j);
    }
    for (const auto& p : tm_points) points.push_back(parse_point(p));
    if (points.empty())
      throw std::invalid_argument("need --witness or at least one --point");
    emit(tm_out, evaluation_to_json(evaluate_phi(points, *poly, tm_k)).dump(2));
    return 0;
  }

  if (dim_cmd->parsed()) {
    auto poly = dim_src.load();
    auto report = verify_dimension_inequality(*poly, dim_n, dim_k);

    // Dimension of the full product section for the same weights.
    std::vector<int> full(static_cast<std::size_t>(dim_n),
                          poly->face_index(poly->full_face().mask));
    Vec centroid = vertex_centroid(*poly);
    std::vector<Vec> shifted;
    for (const auto& v : poly->vertices()) shifted.push_back(v - centroid);
    Polytope centered = Polytope::build(shifted, poly->name());
    std::vector<int> full_centered(static_cast<std::size_t>(dim_n),
                                   centered.face_index(centered.full_face().mask));
    auto c_dim = intersection_dimension(
        centered, full_centered,
        std::vector<Rational>(static_cast<std::size_t>(dim_n), Rational(1) / dim_n));

    nlohmann::json j;
    j["bound"] = report.bound;
    j["tuples_total"] = report.tuples_total;
    j["tuples_certified"] = report.tuples_certified;
    j["violations"] = report.violations;
    if (c_dim) j["c_dimension"] = *c_dim;
    emit(dim_out, j.dump(2));
    return report.violations > 0 ? 1 : 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
