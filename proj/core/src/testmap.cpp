#include "skelbary/testmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skelbary {

namespace {

// Projection of x onto the affine hull of the face, as exact convex
// coefficients when the foot lands inside the face.
std::optional<Rational> projected_sq_distance(const Vec& x,
                                              const Polytope& poly,
                                              const Face& face) {
  if (face.dim < 0) return std::nullopt;
  const AffineSubspace& hull = face.hull;
  Vec foot = hull.base;
  if (hull.dim() > 0) {
    const int r = hull.dim();
    Mat gram(r, r);
    std::vector<Rational> rhs(static_cast<std::size_t>(r));
    const Vec delta = x - hull.base;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j)
        gram(i, j) = dot(hull.basis[static_cast<std::size_t>(i)],
                         hull.basis[static_cast<std::size_t>(j)]);
      rhs[static_cast<std::size_t>(i)] = dot(hull.basis[static_cast<std::size_t>(i)], delta);
    }
    auto sol = solve_linear(gram, Vec(std::move(rhs)));
    if (!sol) throw std::logic_error("gram system must be solvable");
    foot = hull.point_at(sol->particular);
  }
  if (!poly.face_membership(face, foot)) return std::nullopt;
  return (x - foot).squared_norm();
}

}  // namespace

Rational squared_dist_to_face(const Vec& x, const Polytope& poly,
                              const Face& face) {
  if (x.dim() != poly.ambient_dim())
    throw std::invalid_argument("point dimension mismatch");
  std::optional<Rational> best;
  for (const auto& sub : poly.faces()) {
    if (sub.dim < 0 || (sub.mask & ~face.mask) != 0) continue;
    auto d2 = projected_sq_distance(x, poly, sub);
    if (d2 && (!best || *d2 < *best)) best = d2;
  }
  if (!best) throw std::invalid_argument("face has no vertices");
  return *best;
}

Rational squared_dist_to_skeleton(const Vec& x, const Polytope& poly, int k) {
  if (x.dim() != poly.ambient_dim())
    throw std::invalid_argument("point dimension mismatch");
  if (k < 0) throw std::invalid_argument("negative skeleton dimension");
  std::optional<Rational> best;
  for (int idx : poly.skeleton_face_indices(k)) {
    auto d2 = projected_sq_distance(x, poly, poly.face(idx));
    if (d2 && (!best || *d2 < *best)) best = d2;
  }
  if (!best) throw std::logic_error("skeleton is never empty");
  return *best;
}

double dist_to_face(const Vec& x, const Polytope& poly, const Face& face) {
  return std::sqrt(to_double(squared_dist_to_face(x, poly, face)));
}

double dist_to_skeleton(const Vec& x, const Polytope& poly, int k) {
  return std::sqrt(to_double(squared_dist_to_skeleton(x, poly, k)));
}

TestMapEvaluation evaluate_phi(const std::vector<Vec>& points,
                               const Polytope& poly, int k) {
  if (points.empty()) throw std::invalid_argument("no points given");
  TestMapEvaluation eval;
  eval.psi.reserve(points.size());
  for (const auto& p : points) eval.psi.push_back(dist_to_skeleton(p, poly, k));

  // Canonical (value-ascending) summation: the mean, and hence phi, is
  // exactly invariant under permutations of the input points.
  std::vector<double> ordered(eval.psi);
  std::sort(ordered.begin(), ordered.end());
  double sum = 0.0;
  for (double v : ordered) sum += v;
  const double mean = sum / static_cast<double>(points.size());

  eval.phi.reserve(points.size());
  for (double v : eval.psi) {
    const double f = v - mean;
    eval.phi.push_back(f);
    eval.phi_max_abs = std::max(eval.phi_max_abs, std::fabs(f));
  }
  return eval;
}

}  // namespace skelbary
