// Test-only independent oracles. These deliberately take different
// algorithmic routes than the library so agreement is evidence, not
// tautology.
#ifndef SKELBARY_TESTS_ORACLES_HPP
#define SKELBARY_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelbary/linalg.hpp"
#include "skelbary/lp.hpp"
#include "skelbary/polytope.hpp"
#include "skelbary/rng.hpp"

namespace skelbary::oracle {

// Plain rational Gaussian elimination, pivoting from the LAST column
// backwards and picking the largest-magnitude pivot. Independent of the
// fraction-free path.
inline int rank_reverse_gauss(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = cols - 1; c >= 0 && r < rows; --c) {
    int pr = -1;
    Rational best = 0;
    for (int i = r; i < rows; ++i) {
      Rational a = abs(m[i][static_cast<std::size_t>(c)]);
      if (a > best) {
        best = a;
        pr = i;
      }
    }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                         m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  return r;
}

inline int rank_reverse_gauss(const std::vector<Vec>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.push_back(r.coords());
  return rank_reverse_gauss(std::move(m));
}

// Feasibility of {A x = b, x >= 0} by exhaustive enumeration of supports
// on linearly independent column sets: if the region is nonempty it has a
// basic feasible solution, whose support is such a set.
inline bool lp_feasible_by_enumeration(const StandardLP& lp) {
  const int n = lp.A.cols();
  const int m = lp.A.rows();
  const int max_size = std::min(n, m);

  std::vector<int> cols;
  auto consistent_nonneg = [&](const std::vector<int>& support) {
    Mat sub(m, static_cast<int>(support.size()));
    for (int j = 0; j < static_cast<int>(support.size()); ++j)
      for (int i = 0; i < m; ++i) sub(i, j) = lp.A(i, support[static_cast<std::size_t>(j)]);
    auto sol = solve_linear(sub, lp.b);
    if (!sol) return false;
    if (!sol->nullspace.empty()) return false;  // dependent columns: skip
    for (int j = 0; j < static_cast<int>(support.size()); ++j)
      if (sol->particular[j] < 0) return false;
    return true;
  };

  // size-0 support: b == 0
  if (lp.b.is_zero()) return true;

  std::vector<int> idx;
  for (int size = 1; size <= max_size; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      if (consistent_nonneg(idx)) return true;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (size - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

// Random search for a strictly positive solution of {A x = b, x >= 0}:
// particular + random nullspace combinations. Finding one proves the
// relative interior is nonempty; not finding one proves nothing.
inline std::optional<Vec> sample_strict_point(const StandardLP& lp, Rng& rng,
                                              int attempts = 2000) {
  auto sol = solve_linear(lp.A, lp.b);
  if (!sol) return std::nullopt;
  const auto strictly_positive = [](const Vec& x) {
    for (int j = 0; j < x.dim(); ++j)
      if (x[j] <= 0) return false;
    return true;
  };
  if (strictly_positive(sol->particular)) return sol->particular;
  for (int a = 0; a < attempts; ++a) {
    Vec x = sol->particular;
    for (const auto& v : sol->nullspace)
      x = x + (Rational(rng.range(-64, 64)) / 64) * v;
    if (strictly_positive(x)) return x;
  }
  return std::nullopt;
}

// 3D-only facet oracle: hyperplane through every vertex triple via the
// cross product, kept when it supports the whole set. Canonical integer
// keys for comparison.
inline std::vector<std::vector<Integer>> facets_by_cross_product(
    const std::vector<Vec>& pts) {
  auto canonical = [](std::vector<Rational> v) {
    Integer l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
    std::vector<Integer> w(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = numerator(v[i]) * (l / denominator(v[i]));
      g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g != 0)
      for (auto& x : w) x /= g;
    return w;
  };

  std::map<std::vector<Integer>, bool> found;
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const Vec u = pts[static_cast<std::size_t>(b)] - pts[static_cast<std::size_t>(a)];
        const Vec v = pts[static_cast<std::size_t>(c)] - pts[static_cast<std::size_t>(a)];
        std::vector<Rational> nrm{u[1] * v[2] - u[2] * v[1],
                                  u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
        Vec normal{nrm[0], nrm[1], nrm[2]};
        if (normal.is_zero()) continue;
        const Rational off = dot(normal, pts[static_cast<std::size_t>(a)]);
        bool below = false, above = false;
        for (const auto& p : pts) {
          const int s = sign(dot(normal, p) - off);
          below |= s < 0;
          above |= s > 0;
        }
        if (below && above) continue;
        Rational flip = above ? -1 : 1;
        std::vector<Rational> key{flip * nrm[0], flip * nrm[1], flip * nrm[2],
                                  flip * off};
        found[canonical(std::move(key))] = true;
      }
  std::vector<std::vector<Integer>> keys;
  for (auto& [k, _] : found) keys.push_back(k);
  return keys;
}

// Lattice sanity used across the suite: Euler relation, gradedness,
// closure under intersection, facet counts per face.
inline void lattice_failures(const Polytope& poly, std::vector<std::string>& out) {
  const int d = poly.dim();

  // Euler relation on proper faces.
  {
    long euler = 0;
    const auto fv = poly.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i)
      euler += (i % 2 == 0 ? 1 : -1) * fv[i];
    const long expected = 1 - (d % 2 == 0 ? 1 : -1);
    if (euler != expected) out.push_back("euler relation violated");
  }

  // Graded: every j-face (j >= 1) properly contains a (j-1)-face.
  for (const auto& f : poly.faces()) {
    if (f.dim < 1) continue;
    bool found = false;
    for (const auto& g : poly.faces())
      if (g.dim == f.dim - 1 && (g.mask & ~f.mask) == 0 && g.mask != f.mask)
        found = true;
    if (!found) out.push_back("lattice not graded");
  }

  // Intersection-closed.
  for (const auto& f : poly.faces())
    for (const auto& g : poly.faces()) {
      try {
        poly.face_index(f.mask & g.mask);
      } catch (const std::invalid_argument&) {
        out.push_back("lattice not intersection-closed");
      }
    }

  // Each proper j-face lies on at least d - j facets.
  for (const auto& f : poly.faces()) {
    if (f.dim < 0 || f.dim >= d) continue;
    int count = 0;
    for (const auto& facet : poly.facets())
      if ((f.mask & ~facet.tight) == 0) ++count;
    if (count < d - f.dim) out.push_back("face on too few facets");
  }

  // Facet inequalities valid everywhere, tight exactly on their sets, and
  // tight sets affinely (d-1)-dimensional.
  for (const auto& facet : poly.facets()) {
    std::vector<Vec> tight_pts;
    for (int v = 0; v < static_cast<int>(poly.vertices().size()); ++v) {
      const Rational val = dot(facet.normal, poly.vertex(v)) - facet.offset;
      if (val > 0) out.push_back("facet inequality violated by a vertex");
      const bool tight = (facet.tight >> v) & 1;
      if (tight != (val == 0)) out.push_back("facet tight set wrong");
      if (tight) tight_pts.push_back(poly.vertex(v));
    }
    if (!tight_pts.empty() && affine_hull(tight_pts).dim() != d - 1)
      out.push_back("facet tight set has wrong dimension");
  }
}

inline bool lattice_ok(const Polytope& poly) {
  std::vector<std::string> failures;
  lattice_failures(poly, failures);
  return failures.empty();
}

}  // namespace skelbary::oracle

#endif
