#include "skelbary/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skelbary {

namespace {

std::vector<int> mask_to_ids(VertexMask mask) {
  std::vector<int> ids;
  for (int i = 0; i < 64; ++i)
    if (mask & (VertexMask{1} << i)) ids.push_back(i);
  return ids;
}

// Integer direction with coprime entries; orientation is preserved, so
// equal oriented hyperplanes get equal keys.
std::vector<Integer> canonical_direction(const std::vector<Rational>& v) {
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
}

// True when p is a convex combination of the given points.
bool in_convex_hull(const Vec& p, const std::vector<Vec>& points,
                    int skip_index) {
  const int d = p.dim();
  std::vector<int> use;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (i != skip_index) use.push_back(i);
  if (use.empty()) return false;
  Mat A(d + 1, static_cast<int>(use.size()));
  for (int c = 0; c < static_cast<int>(use.size()); ++c) {
    const Vec& q = points[static_cast<std::size_t>(use[static_cast<std::size_t>(c)])];
    for (int r = 0; r < d; ++r) A(r, c) = q[r];
    A(d, c) = 1;
  }
  std::vector<Rational> rhs(p.coords());
  rhs.push_back(1);
  return feasible(StandardLP{std::move(A), Vec(std::move(rhs))}).feasible();
}

// Distinct points, lexicographically sorted; canonical vertex order makes
// the build independent of input point order.
std::vector<Vec> dedupe_sorted(const std::vector<Vec>& points) {
  std::set<Vec> set(points.begin(), points.end());
  return {set.begin(), set.end()};
}

struct Chart {
  bool identity = true;
  AffineSubspace hull;  // used when not identity
  Mat gram;             // basis gram matrix, cached for normal lifting

  Vec to_intrinsic(const Vec& x) const {
    if (identity) return x;
    auto t = hull.coordinates_of(x);
    if (!t) throw std::logic_error("point off its own affine hull");
    return *t;
  }

  // Ambient covector agreeing with the intrinsic covector n on the hull:
  // solve G u = n, lift as B u.
  std::pair<Vec, Rational> lift_inequality(const Vec& n, const Rational& c) const {
    if (identity) return {n, c};
    auto sol = solve_linear(gram, n);
    if (!sol) throw std::logic_error("gram system must be solvable");
    const Vec& u = sol->particular;
    Vec normal = Vec::zero(hull.ambient_dim());
    for (int j = 0; j < hull.dim(); ++j)
      normal = normal + u[j] * hull.basis[static_cast<std::size_t>(j)];
    Rational offset = c + dot(normal, hull.base);
    return {normal, offset};
  }
};

// Next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Polytope Polytope::build(const std::vector<Vec>& points, std::string name) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  const int ambient = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != ambient)
      throw std::invalid_argument("points of mixed dimension");

  std::vector<Vec> candidates = dedupe_sorted(points);

  // Drop points inside the hull of the others. Removing a non-vertex never
  // removes a vertex's witness set, so one pass suffices.
  for (int i = 0; i < static_cast<int>(candidates.size());) {
    if (in_convex_hull(candidates[static_cast<std::size_t>(i)], candidates, i))
      candidates.erase(candidates.begin() + i);
    else
      ++i;
  }
  if (candidates.size() > 64)
    throw std::invalid_argument("more than 64 vertices is beyond desk scale");

  Polytope poly;
  poly.name_ = std::move(name);
  poly.vertices_ = std::move(candidates);
  poly.ambient_dim_ = ambient;
  poly.hull_ = affine_hull(poly.vertices_);
  poly.dim_ = poly.hull_.dim();
  const int m = poly.dim_;
  const int nv = static_cast<int>(poly.vertices_.size());
  const VertexMask full_mask =
      nv == 64 ? ~VertexMask{0} : (VertexMask{1} << nv) - 1;

  Chart chart;
  if (m != ambient) {
    chart.identity = false;
    chart.hull = poly.hull_;
    chart.gram = Mat(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        chart.gram(i, j) = dot(chart.hull.basis[static_cast<std::size_t>(i)],
                               chart.hull.basis[static_cast<std::size_t>(j)]);
  }
  std::vector<Vec> intrinsic;
  intrinsic.reserve(static_cast<std::size_t>(nv));
  for (const auto& v : poly.vertices_) intrinsic.push_back(chart.to_intrinsic(v));

  // Facets: hyperplanes spanned by m affinely independent vertices that
  // support the whole vertex set. Every facet contains such a subset.
  std::map<std::vector<Integer>, Facet> facet_set;
  if (m >= 1) {
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      Mat diffs(m - 1, m);
      for (int r = 0; r + 1 < m; ++r) {
        const Vec d = intrinsic[static_cast<std::size_t>(idx[static_cast<std::size_t>(r + 1)])] -
                      intrinsic[static_cast<std::size_t>(idx[0])];
        for (int c = 0; c < m; ++c) diffs(r, c) = d[c];
      }
      auto sol = solve_linear(diffs, Vec::zero(m - 1));
      if (!sol || sol->nullspace.size() != 1) continue;  // affinely dependent
      Vec n = sol->nullspace.front();
      Rational c = dot(n, intrinsic[static_cast<std::size_t>(idx[0])]);

      bool any_below = false, any_above = false;
      for (const auto& q : intrinsic) {
        const int s = sign(dot(n, q) - c);
        any_below |= s < 0;
        any_above |= s > 0;
      }
      if (any_below && any_above) continue;  // not supporting
      if (!any_below && !any_above) continue;
      if (any_above) {
        n = -n;
        c = -c;
      }

      VertexMask tight = 0;
      for (int v = 0; v < nv; ++v)
        if (dot(n, intrinsic[static_cast<std::size_t>(v)]) == c)
          tight |= VertexMask{1} << v;

      std::vector<Rational> key_vec(n.coords());
      key_vec.push_back(c);
      auto key = canonical_direction(key_vec);
      if (facet_set.count(key)) continue;
      auto [normal, offset] = chart.lift_inequality(n, c);
      facet_set.emplace(std::move(key), Facet{std::move(normal), std::move(offset), tight});
    } while (next_subset(idx, nv));
  }
  for (auto& [key, f] : facet_set) poly.facets_.push_back(std::move(f));

  // Face lattice: closure of the facet incidence sets under intersection.
  std::set<VertexMask> masks;
  masks.insert(full_mask);
  masks.insert(VertexMask{0});
  std::vector<VertexMask> work{full_mask};
  while (!work.empty()) {
    const VertexMask w = work.back();
    work.pop_back();
    for (const auto& f : poly.facets_) {
      const VertexMask x = w & f.tight;
      if (masks.insert(x).second) work.push_back(x);
    }
  }

  for (VertexMask mask : masks) {
    Face face;
    face.mask = mask;
    face.vertex_ids = mask_to_ids(mask);
    if (!face.vertex_ids.empty()) {
      std::vector<Vec> pts;
      pts.reserve(face.vertex_ids.size());
      for (int id : face.vertex_ids) pts.push_back(poly.vertex(id));
      face.hull = affine_hull(pts);
      face.dim = face.hull.dim();
      std::vector<Rational> lo(pts.front().coords()), hi(pts.front().coords());
      for (const auto& p : pts)
        for (int c = 0; c < ambient; ++c) {
          if (p[c] < lo[static_cast<std::size_t>(c)]) lo[static_cast<std::size_t>(c)] = p[c];
          if (p[c] > hi[static_cast<std::size_t>(c)]) hi[static_cast<std::size_t>(c)] = p[c];
        }
      face.box_min = Vec(std::move(lo));
      face.box_max = Vec(std::move(hi));
    }
    poly.faces_.push_back(std::move(face));
  }
  std::sort(poly.faces_.begin(), poly.faces_.end(),
            [](const Face& a, const Face& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.vertex_ids < b.vertex_ids;
            });
  for (int i = 0; i < static_cast<int>(poly.faces_.size()); ++i)
    poly.face_index_[poly.faces_[static_cast<std::size_t>(i)].mask] = i;

  return poly;
}

int Polytope::face_index(VertexMask mask) const {
  auto it = face_index_.find(mask);
  if (it == face_index_.end())
    throw std::invalid_argument("vertex set is not a lattice face");
  return it->second;
}

std::vector<int> Polytope::skeleton_face_indices(int k) const {
  VertexMask full =
      vertices_.size() == 64 ? ~VertexMask{0}
                             : (VertexMask{1} << vertices_.size()) - 1;
  return skeleton_face_indices(k, full);
}

std::vector<int> Polytope::skeleton_face_indices(int k, VertexMask within) const {
  if (k < 0) throw std::invalid_argument("negative skeleton dimension");
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
    const Face& f = faces_[static_cast<std::size_t>(i)];
    if (f.dim < 0 || f.dim > k) continue;
    if ((f.mask & ~within) != 0) continue;
    out.push_back(i);
  }
  return out;
}

std::vector<Face> Polytope::faces_of_dim_at_most(int k) const {
  std::vector<Face> out;
  for (int i : skeleton_face_indices(k)) out.push_back(face(i));
  return out;
}

std::vector<long> Polytope::f_vector() const {
  std::vector<long> f(static_cast<std::size_t>(std::max(dim_, 0)), 0);
  for (const auto& face : faces_)
    if (face.dim >= 0 && face.dim < dim_) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

bool Polytope::contains(const Vec& x) const {
  if (x.dim() != ambient_dim_)
    throw std::invalid_argument("point dimension mismatch");
  if (dim_ < ambient_dim_ && !hull_.contains(x)) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  if (dim_ == 0) return x == vertices_.front();
  return true;
}

const Face& Polytope::carrier_face(const Vec& p) const {
  if (!contains(p)) throw std::invalid_argument("point not in polytope");
  VertexMask mask =
      vertices_.size() == 64 ? ~VertexMask{0}
                             : (VertexMask{1} << vertices_.size()) - 1;
  for (const auto& f : facets_)
    if (dot(f.normal, p) == f.offset) mask &= f.tight;
  return face(face_index(mask));
}

std::optional<std::vector<Rational>> Polytope::face_membership(
    const Face& f, const Vec& x) const {
  if (x.dim() != ambient_dim_)
    throw std::invalid_argument("point dimension mismatch");
  if (f.vertex_ids.empty()) return std::nullopt;
  const int nv = static_cast<int>(f.vertex_ids.size());
  Mat A(ambient_dim_ + 1, nv);
  for (int c = 0; c < nv; ++c) {
    const Vec& v = vertex(f.vertex_ids[static_cast<std::size_t>(c)]);
    for (int r = 0; r < ambient_dim_; ++r) A(r, c) = v[r];
    A(ambient_dim_, c) = 1;
  }
  std::vector<Rational> rhs(x.coords());
  rhs.push_back(1);
  auto res = feasible(StandardLP{std::move(A), Vec(std::move(rhs))});
  if (!res.feasible()) return std::nullopt;
  return res.point->coords();
}

}  // namespace skelbary
