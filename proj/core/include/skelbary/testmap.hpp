#ifndef SKELBARY_TESTMAP_HPP
#define SKELBARY_TESTMAP_HPP

#include <optional>
#include <vector>

#include "skelbary/polytope.hpp"

namespace skelbary {

/// Distance vector to the skeleton and its projection onto the
/// mean-zero hyperplane. Zero phi with zero psi witnesses a solution.
struct TestMapEvaluation {
  std::vector<double> psi;  // nonnegative distances
  std::vector<double> phi;  // psi minus its mean; sums to ~0
  double phi_max_abs = 0.0;
};

/// Exact squared Euclidean distance from x to conv(face.vertices):
/// orthogonal projection onto the affine hull of every subface, keeping
/// projections that land inside their subface. All in rational arithmetic.
Rational squared_dist_to_face(const Vec& x, const Polytope& poly,
                              const Face& face);

/// Min over faces of dimension <= k. k is clamped to dim(poly).
Rational squared_dist_to_skeleton(const Vec& x, const Polytope& poly, int k);

double dist_to_face(const Vec& x, const Polytope& poly, const Face& face);
double dist_to_skeleton(const Vec& x, const Polytope& poly, int k);

/// psi from dist_to_skeleton; phi = psi - mean(psi). The mean is summed
/// in ascending value order so the map commutes with permutations of the
/// input points exactly, even in floating arithmetic.
TestMapEvaluation evaluate_phi(const std::vector<Vec>& points,
                               const Polytope& poly, int k);

}  // namespace skelbary

#endif
