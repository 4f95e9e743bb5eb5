#ifndef SKELBARY_JSON_IO_HPP
#define SKELBARY_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "skelbary/polytope.hpp"
#include "skelbary/solver.hpp"
#include "skelbary/testmap.hpp"

namespace skelbary {

/// Polytope JSON: {"name": string, "vertices": [[rational-string, ...], ...]}.
nlohmann::json polytope_to_json(const Polytope& poly);
Polytope polytope_from_json(const nlohmann::json& j);

/// Witness JSON: {"points", "carriers", "coefficients",
/// "tuples_examined", "deterministic"}; carriers are sorted vertex
/// index arrays, rationals are lowest-terms strings.
nlohmann::json witness_to_json(const DecompositionWitness& w);
std::vector<Vec> points_from_witness_json(const nlohmann::json& j);

nlohmann::json infeasibility_to_json(const InfeasibilityReport& rep);
nlohmann::json evaluation_to_json(const TestMapEvaluation& eval);

/// Debug dump of an equality-form LP, rationals as strings.
nlohmann::json lp_to_json(const StandardLP& lp);

/// Lattice summary for the build subcommand.
nlohmann::json lattice_summary(const Polytope& poly);

Vec parse_point(const std::string& comma_separated);

}  // namespace skelbary

#endif
