#ifndef SKELBARY_GENERATORS_HPP
#define SKELBARY_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "skelbary/polytope.hpp"
#include "skelbary/rng.hpp"

namespace skelbary {

enum class GeneratorKind { Simplex, Cube, CrossPolytope, RandomHull };

GeneratorKind parse_generator(const std::string& name);
std::string to_string(GeneratorKind kind);

/// Deterministic families ignore the seed. random_hull draws 2*dim + 4
/// points with coordinates numerator/1000, numerator uniform in
/// [-1000, 1000], redrawing until the hull has intrinsic dimension dim.
Polytope generate(GeneratorKind kind, int dim, std::uint64_t seed);

/// Positive random convex combination of all vertices: a relative
/// interior point with exact rational coordinates.
Vec random_interior_point(const Polytope& poly, Rng& rng);

/// Relative interior point of a random facet (the vertex itself for a
/// 0-polytope).
Vec random_boundary_point(const Polytope& poly, Rng& rng);

/// Average of the vertices.
Vec vertex_centroid(const Polytope& poly);

}  // namespace skelbary

#endif
