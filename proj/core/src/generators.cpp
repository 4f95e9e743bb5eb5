#include "skelbary/generators.hpp"

#include <stdexcept>

namespace skelbary {

namespace {

Polytope build_simplex(int dim) {
  std::vector<Vec> pts;
  pts.push_back(Vec::zero(dim));
  for (int i = 0; i < dim; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(dim));
    c[static_cast<std::size_t>(i)] = 1;
    pts.emplace_back(std::move(c));
  }
  return Polytope::build(pts, "simplex");
}

Polytope build_cube(int dim) {
  std::vector<Vec> pts;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
    std::vector<Rational> c(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      c[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? 1 : -1;
    pts.emplace_back(std::move(c));
  }
  return Polytope::build(pts, "cube");
}

Polytope build_cross(int dim) {
  std::vector<Vec> pts;
  for (int i = 0; i < dim; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> c(static_cast<std::size_t>(dim));
      c[static_cast<std::size_t>(i)] = s;
      pts.emplace_back(std::move(c));
    }
  }
  return Polytope::build(pts, "cross_polytope");
}

Polytope build_random_hull(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const int npoints = 2 * dim + 4;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(npoints));
    for (int p = 0; p < npoints; ++p) {
      std::vector<Rational> c(static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i)
        c[static_cast<std::size_t>(i)] = Rational(rng.range(-1000, 1000)) / 1000;
      pts.emplace_back(std::move(c));
    }
    Polytope poly = Polytope::build(pts, "random_hull");
    if (poly.dim() == dim) return poly;
  }
  throw std::logic_error("random hull degenerate after 100 attempts");
}

}  // namespace

GeneratorKind parse_generator(const std::string& name) {
  if (name == "simplex") return GeneratorKind::Simplex;
  if (name == "cube") return GeneratorKind::Cube;
  if (name == "cross_polytope") return GeneratorKind::CrossPolytope;
  if (name == "random_hull") return GeneratorKind::RandomHull;
  throw std::invalid_argument("unknown generator: " + name);
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Simplex: return "simplex";
    case GeneratorKind::Cube: return "cube";
    case GeneratorKind::CrossPolytope: return "cross_polytope";
    case GeneratorKind::RandomHull: return "random_hull";
  }
  throw std::logic_error("unreachable");
}

Polytope generate(GeneratorKind kind, int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("generator dimension must be >= 1");
  switch (kind) {
    case GeneratorKind::Simplex: return build_simplex(dim);
    case GeneratorKind::Cube: return build_cube(dim);
    case GeneratorKind::CrossPolytope: return build_cross(dim);
    case GeneratorKind::RandomHull: return build_random_hull(dim, seed);
  }
  throw std::logic_error("unreachable");
}

Vec random_interior_point(const Polytope& poly, Rng& rng) {
  const auto& verts = poly.vertices();
  Rational total = 0;
  std::vector<Rational> w(verts.size());
  for (auto& wi : w) {
    wi = rng.range(1, 1000);
    total += wi;
  }
  Vec p = Vec::zero(poly.ambient_dim());
  for (std::size_t i = 0; i < verts.size(); ++i)
    p = p + (w[i] / total) * verts[i];
  return p;
}

Vec random_boundary_point(const Polytope& poly, Rng& rng) {
  if (poly.facets().empty()) return poly.vertices().front();
  const auto& facet =
      poly.facets()[static_cast<std::size_t>(rng.below(poly.facets().size()))];
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(poly.vertices().size()); ++i)
    if (facet.tight & (VertexMask{1} << i)) ids.push_back(i);
  Rational total = 0;
  std::vector<Rational> w(ids.size());
  for (auto& wi : w) {
    wi = rng.range(1, 1000);
    total += wi;
  }
  Vec p = Vec::zero(poly.ambient_dim());
  for (std::size_t i = 0; i < ids.size(); ++i)
    p = p + (w[i] / total) * poly.vertex(ids[i]);
  return p;
}

Vec vertex_centroid(const Polytope& poly) {
  Vec c = Vec::zero(poly.ambient_dim());
  for (const auto& v : poly.vertices()) c = c + v;
  return (Rational(1) / static_cast<int>(poly.vertices().size())) * c;
}

}  // namespace skelbary
