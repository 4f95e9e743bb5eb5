#ifndef SKELBARY_SOLVER_HPP
#define SKELBARY_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "skelbary/polytope.hpp"

namespace skelbary {

/// One summand of the barycenter: a skeleton dimension bound and a
/// positive weight. Weights must sum to 1 exactly.
struct Part {
  int skeleton_dim = 0;
  Rational weight;
};

struct DecompositionRequest {
  std::shared_ptr<const Polytope> polytope;
  Vec target;
  std::vector<Part> parts;

  /// n parts of (k, 1/n).
  static DecompositionRequest homogeneous(std::shared_ptr<const Polytope> p,
                                          Vec target, int n, int k);
};

struct DecompositionWitness {
  std::vector<Vec> points;
  std::vector<Face> carriers;  // face of the polytope containing the point
  std::vector<std::vector<Rational>> coefficients;  // over carrier vertices
  std::uint64_t tuples_examined = 0;
  bool deterministic = true;
};

/// Emitted only after exhausting the tuple stream with every tuple
/// certified infeasible (Farkas vector from the LP, or the exact interval
/// bound for pruned tuples).
struct InfeasibilityReport {
  std::uint64_t tuples_examined = 0;
  bool all_certified = false;
};

using DecomposeResult = std::variant<DecompositionWitness, InfeasibilityReport>;

enum class Strategy { Direct, Factored };

struct SolveOptions {
  Strategy strategy = Strategy::Direct;
  bool parallel = false;
  int threads = 0;  // 0: hardware concurrency
};

/// Finds points p_i on the requested skeleta with weighted barycenter
/// equal to the target, reducing to the carrier face of the target first.
/// Tuples of candidate faces are enumerated by total dimension, then
/// lexicographic face ids; the first feasible tuple yields the witness.
///
/// For homogeneous requests with k * n >= dim(carrier), a witness is
/// guaranteed to exist; exhaustion throws std::logic_error in that case.
/// Throws std::invalid_argument when the target lies outside the polytope
/// or the factored strategy is requested for prime n or heterogeneous
/// parts.
DecomposeResult decompose(const DecompositionRequest& req,
                          const SolveOptions& options = {});

/// Heterogeneous explorer; identical machinery, no existence guarantee.
DecomposeResult decompose_general(const DecompositionRequest& req);

/// Exact verification of all witness invariants.
bool check_witness(const DecompositionRequest& req,
                   const DecompositionWitness& w);

/// Size of the full tuple enumeration for the request (no solving);
/// the worst case a direct search can examine.
std::uint64_t count_tuples(const DecompositionRequest& req);

/// Closed-form Farkas certificate for tuples rejected by the interval
/// prune; nullopt when the prune does not reject.
std::optional<Vec> interval_farkas(const Polytope& poly,
                                   const std::vector<Part>& parts,
                                   const Vec& target,
                                   const std::vector<int>& tuple_faces);

/// The tuple feasibility system itself (coordinate rows, then one
/// convexity row per face); exposed for oracles and debugging.
StandardLP tuple_lp(const Polytope& poly, const std::vector<Part>& parts,
                    const Vec& target, const std::vector<int>& tuple_faces);

struct IntersectionInfo {
  bool empty = true;
  int dim = -1;
  bool degenerate = false;        // relative interior met only after recursion
  std::vector<int> final_faces;   // carrier subfaces the set degenerated to
};

/// Dimension calculus of {(x_1..x_n) : x_i in face_i, sum w_i x_i = 0}.
/// When a relative-interior point exists (certified by max_slack) the
/// dimension is that of the affine solution space on the product of
/// affine hulls; otherwise the set is a section of a proper subproduct
/// and the calculus recurses on those carrier subfaces.
IntersectionInfo intersection_info(const Polytope& poly,
                                   const std::vector<int>& face_indices,
                                   const std::vector<Rational>& weights);

/// Spec-facing wrapper: nullopt when the set is empty.
std::optional<int> intersection_dimension(const Polytope& poly,
                                          const std::vector<int>& face_indices,
                                          const std::vector<Rational>& weights);

struct DimInequalityReport {
  long tuples_total = 0;
  long tuples_certified = 0;
  long violations = 0;
  int bound = 0;  // n(k+1) - d
};

/// Sweeps every multiset of faces of dimension >= k+1 and asserts the
/// certified intersection dimension is at least n(k+1) - d. The polytope
/// is re-centered on its vertex centroid so 0 is interior.
DimInequalityReport verify_dimension_inequality(const Polytope& poly, int n,
                                                int k);

}  // namespace skelbary

#endif
