#include "skelbary/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace skelbary {

namespace {

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(to_string(v[i]));
  return arr;
}

Vec vec_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected a point array");
  std::vector<Rational> coords;
  coords.reserve(arr.size());
  for (const auto& item : arr)
    coords.push_back(parse_rational(item.get<std::string>()));
  return Vec(std::move(coords));
}

}  // namespace

nlohmann::json polytope_to_json(const Polytope& poly) {
  nlohmann::json j;
  j["name"] = poly.name();
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : poly.vertices()) verts.push_back(vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.contains("vertices"))
    throw std::invalid_argument("polytope JSON lacks \"vertices\"");
  std::vector<Vec> points;
  for (const auto& row : j.at("vertices")) points.push_back(vec_from_json(row));
  std::string name = j.value("name", std::string{});
  return Polytope::build(points, std::move(name));
}

nlohmann::json witness_to_json(const DecompositionWitness& w) {
  nlohmann::json j;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : w.points) points.push_back(vec_to_json(p));
  nlohmann::json carriers = nlohmann::json::array();
  for (const auto& f : w.carriers) carriers.push_back(f.vertex_ids);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : w.coefficients) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& q : c) row.push_back(to_string(q));
    coeffs.push_back(row);
  }
  j["points"] = points;
  j["carriers"] = carriers;
  j["coefficients"] = coeffs;
  j["tuples_examined"] = w.tuples_examined;
  j["deterministic"] = w.deterministic;
  return j;
}

std::vector<Vec> points_from_witness_json(const nlohmann::json& j) {
  std::vector<Vec> out;
  for (const auto& row : j.at("points")) out.push_back(vec_from_json(row));
  return out;
}

nlohmann::json infeasibility_to_json(const InfeasibilityReport& rep) {
  nlohmann::json j;
  j["status"] = "infeasible";
  j["tuples_examined"] = rep.tuples_examined;
  j["all_certified"] = rep.all_certified;
  return j;
}

nlohmann::json evaluation_to_json(const TestMapEvaluation& eval) {
  nlohmann::json j;
  j["psi"] = eval.psi;
  j["phi"] = eval.phi;
  j["phi_max_abs"] = eval.phi_max_abs;
  return j;
}

nlohmann::json lp_to_json(const StandardLP& lp) {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < lp.A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < lp.A.cols(); ++c) row.push_back(to_string(lp.A(i, c)));
    rows.push_back(row);
  }
  j["A"] = rows;
  j["b"] = vec_to_json(lp.b);
  return j;
}

nlohmann::json lattice_summary(const Polytope& poly) {
  nlohmann::json j;
  j["name"] = poly.name();
  j["dim"] = poly.dim();
  j["ambient_dim"] = poly.ambient_dim();
  j["vertices"] = poly.vertices().size();
  j["facets"] = poly.facets().size();
  j["f_vector"] = poly.f_vector();
  j["faces_total"] = poly.faces().size();
  return j;
}

Vec parse_point(const std::string& comma_separated) {
  std::vector<Rational> coords;
  std::stringstream ss(comma_separated);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(parse_rational(tok));
  if (coords.empty()) throw std::invalid_argument("empty point literal");
  return Vec(std::move(coords));
}

}  // namespace skelbary
