#ifndef SKELBARY_POLYTOPE_HPP
#define SKELBARY_POLYTOPE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelbary/linalg.hpp"
#include "skelbary/lp.hpp"
#include "skelbary/vec.hpp"

namespace skelbary {

/// Vertex index set as a bitset; construction is capped at 64 vertices.
using VertexMask = std::uint64_t;

/// Supporting inequality normal . x <= offset, tight exactly on `tight`.
/// Stored in ambient coordinates and valid on the whole affine hull.
struct Facet {
  Vec normal;
  Rational offset;
  VertexMask tight = 0;
};

struct Face {
  std::vector<int> vertex_ids;  // sorted indices into Polytope::vertices()
  int dim = -1;                 // -1 marks the empty face
  AffineSubspace hull;          // ambient; unset for the empty face
  VertexMask mask = 0;
  Vec box_min, box_max;         // componentwise vertex bounds
};

/// Convex polytope built from a vertex list: facet inequalities, the full
/// graded face lattice, and exact membership machinery. Immutable after
/// build; safe to share across threads.
class Polytope {
 public:
  /// Drops redundant (non-vertex) points, enumerates facets by brute force
  /// over intrinsic-dimension-sized vertex subsets, and closes the
  /// facet-vertex incidence sets under intersection to get the lattice.
  /// Hulls that are not full-dimensional are handled through an intrinsic
  /// chart; all stored data stays in ambient coordinates.
  static Polytope build(const std::vector<Vec>& points, std::string name = "");

  const std::string& name() const { return name_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Vec& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const std::vector<Facet>& facets() const { return facets_; }
  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_dim_; }
  const AffineSubspace& hull() const { return hull_; }

  /// All lattice faces including the empty face and the polytope itself,
  /// sorted by (dimension, lexicographic vertex_ids).
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int index) const { return faces_[static_cast<std::size_t>(index)]; }
  const Face& full_face() const { return faces_.back(); }
  int face_index(VertexMask mask) const;

  /// Indices of faces with 0 <= dim <= min(k, dim()), optionally restricted
  /// to faces whose vertices all lie inside `within`. Ascending index order
  /// coincides with (dimension, lex vertex_ids) order.
  std::vector<int> skeleton_face_indices(int k) const;
  std::vector<int> skeleton_face_indices(int k, VertexMask within) const;

  /// Spec-facing copy of the k-skeleton in canonical order.
  std::vector<Face> faces_of_dim_at_most(int k) const;

  /// Number of faces per dimension 0 .. dim()-1 (proper faces).
  std::vector<long> f_vector() const;

  /// Exact membership: every facet inequality plus the affine hull.
  bool contains(const Vec& x) const;

  /// The inclusion-minimal face containing p; p lies in its relative
  /// interior. Throws std::invalid_argument when p is outside.
  const Face& carrier_face(const Vec& p) const;

  /// Exact convex coefficients over the face's vertices reproducing x,
  /// or nullopt. Decided by LP feasibility.
  std::optional<std::vector<Rational>> face_membership(const Face& f,
                                                       const Vec& x) const;

 private:
  std::string name_;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  AffineSubspace hull_;
  int dim_ = 0;
  int ambient_dim_ = 0;
  std::vector<Face> faces_;
  std::map<VertexMask, int> face_index_;
};

}  // namespace skelbary

#endif
