#ifndef SKELBARY_LINALG_HPP
#define SKELBARY_LINALG_HPP

#include <optional>
#include <vector>

#include "skelbary/vec.hpp"

namespace skelbary {

/// Affine subspace given by a base point and linearly independent
/// direction vectors.
struct AffineSubspace {
  Vec base;
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  int ambient_dim() const { return base.dim(); }

  bool contains(const Vec& x) const;

  /// Coordinates t with base + sum t_i * basis_i == x, or nullopt when x
  /// is outside the subspace.
  std::optional<Vec> coordinates_of(const Vec& x) const;

  /// base + sum t_i * basis_i.
  Vec point_at(const Vec& t) const;
};

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const std::vector<Vec>& rows);
int rank(const Mat& m);

/// Base point is the first input; basis spans the differences to it.
AffineSubspace affine_hull(const std::vector<Vec>& points);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> nullspace;  // basis of {v : A v = 0}
};

/// Exact solution set of A x = b: nullopt when inconsistent, otherwise a
/// particular solution plus a nullspace basis (dimension = cols - rank A).
std::optional<LinearSolution> solve_linear(const Mat& A, const Vec& b);

}  // namespace skelbary

#endif
