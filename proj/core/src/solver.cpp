#include "skelbary/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace skelbary {

namespace {

struct PruneHit {
  int coord = 0;
  bool upper = false;  // target above the upper bound vs below the lower
};

std::optional<PruneHit> interval_prune(const Polytope& poly,
                                       const std::vector<Part>& parts,
                                       const Vec& target,
                                       const std::vector<int>& tuple_faces) {
  const int d = poly.ambient_dim();
  for (int c = 0; c < d; ++c) {
    Rational lo = 0, hi = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Face& f = poly.face(tuple_faces[i]);
      lo += parts[i].weight * f.box_min[c];
      hi += parts[i].weight * f.box_max[c];
    }
    if (target[c] > hi) return PruneHit{c, true};
    if (target[c] < lo) return PruneHit{c, false};
  }
  return std::nullopt;
}

void validate_request(const DecompositionRequest& req) {
  if (!req.polytope) throw std::invalid_argument("request without a polytope");
  if (req.parts.empty()) throw std::invalid_argument("request without parts");
  if (req.target.dim() != req.polytope->ambient_dim())
    throw std::invalid_argument("target dimension mismatch");
  Rational total = 0;
  for (const auto& p : req.parts) {
    if (p.weight <= 0) throw std::invalid_argument("part weights must be positive");
    if (p.skeleton_dim < 0)
      throw std::invalid_argument("negative skeleton dimension");
    total += p.weight;
  }
  if (total != 1) throw std::invalid_argument("part weights must sum to 1");
}

bool parts_identical(const std::vector<Part>& parts) {
  for (const auto& p : parts)
    if (p.skeleton_dim != parts.front().skeleton_dim ||
        p.weight != parts.front().weight)
      return false;
  return true;
}

// Candidate face lists per part, restricted to the carrier of the target.
struct SearchSetup {
  int carrier_index = -1;
  std::vector<std::vector<int>> lists;
  bool multiset = false;
  bool guaranteed = false;  // homogeneous with k*n >= carrier dimension
};

SearchSetup make_setup(const DecompositionRequest& req) {
  const Polytope& poly = *req.polytope;
  if (!poly.contains(req.target))
    throw std::invalid_argument("target point lies outside the polytope");
  const Face& carrier = poly.carrier_face(req.target);

  SearchSetup setup;
  setup.carrier_index = poly.face_index(carrier.mask);
  setup.lists.reserve(req.parts.size());
  for (const auto& part : req.parts)
    setup.lists.push_back(
        poly.skeleton_face_indices(part.skeleton_dim, carrier.mask));
  setup.multiset = parts_identical(req.parts);
  setup.guaranteed =
      setup.multiset && req.parts.front().skeleton_dim *
                                static_cast<int>(req.parts.size()) >=
                            carrier.dim;
  return setup;
}

// Enumerates face tuples by total dimension, then lexicographic face
// ids. Multiset mode (identical parts only) emits non-decreasing id
// sequences; tuples are then equivalent under slot permutation.
//
// With a prune target set, whole prefixes are skipped when the weighted
// coordinate boxes of the chosen faces plus the loosest completion of
// the remaining slots cannot reach the target. Pruned tuples are
// interval-infeasible, so the first feasible tuple in canonical order is
// unaffected. The last slot is always enumerated: every tuple that
// reaches it counts as examined, whether the final box check rejects it
// or an LP decides it.
class TupleSearch {
 public:
  TupleSearch(const Polytope& poly, const std::vector<std::vector<int>>& lists,
              bool multiset)
      : poly_(poly), lists_(lists), multiset_(multiset),
        n_(static_cast<int>(lists.size())) {
    for (const auto& l : lists_)
      if (l.empty()) return;  // no tuples at all
    suffix_min_.assign(static_cast<std::size_t>(n_) + 1, 0);
    suffix_max_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = n_ - 1; i >= 0; --i) {
      suffix_min_[static_cast<std::size_t>(i)] =
          suffix_min_[static_cast<std::size_t>(i) + 1] +
          dim_of(lists_[static_cast<std::size_t>(i)].front());
      suffix_max_[static_cast<std::size_t>(i)] =
          suffix_max_[static_cast<std::size_t>(i) + 1] +
          dim_of(lists_[static_cast<std::size_t>(i)].back());
    }
    viable_ = true;
  }

  void set_prune_target(const std::vector<Part>& parts, const Vec& target) {
    parts_ = &parts;
    target_ = &target;
    const int d = poly_.ambient_dim();
    const std::size_t nd = static_cast<std::size_t>(n_) * static_cast<std::size_t>(d);
    suffix_lo_.assign(nd + static_cast<std::size_t>(d), Rational(0));
    suffix_hi_.assign(nd + static_cast<std::size_t>(d), Rational(0));
    partial_lo_.assign(nd + static_cast<std::size_t>(d), Rational(0));
    partial_hi_.assign(nd + static_cast<std::size_t>(d), Rational(0));
    // loosest completion: per-slot extremes over the slot's whole list
    for (int s = n_ - 1; s >= 0; --s) {
      for (int c = 0; c < d; ++c) {
        Rational lo, hi;
        bool first = true;
        for (int idx : lists_[static_cast<std::size_t>(s)]) {
          const Face& f = poly_.face(idx);
          const Rational flo = parts[static_cast<std::size_t>(s)].weight * f.box_min[c];
          const Rational fhi = parts[static_cast<std::size_t>(s)].weight * f.box_max[c];
          if (first || flo < lo) lo = flo;
          if (first || fhi > hi) hi = fhi;
          first = false;
        }
        at(suffix_lo_, s, c) = at(suffix_lo_, s + 1, c) + lo;
        at(suffix_hi_, s, c) = at(suffix_hi_, s + 1, c) + hi;
      }
    }
  }

  // Runs on_leaf for each surviving tuple in canonical order until it
  // returns false. Returns false when stopped early.
  bool run(const std::function<bool(const std::vector<int>&)>& on_leaf) {
    if (!viable_) return true;
    current_.assign(static_cast<std::size_t>(n_), 0);
    for (long total = suffix_min_[0]; total <= suffix_max_[0]; ++total)
      if (!descend(0, 0, static_cast<int>(total), on_leaf)) return false;
    return true;
  }

  std::uint64_t examined() const { return examined_; }

 private:
  int dim_of(int face_index) const { return poly_.face(face_index).dim; }

  Rational& at(std::vector<Rational>& v, int slot, int coord) {
    return v[static_cast<std::size_t>(slot) * poly_.ambient_dim() + coord];
  }
  const Rational& at(const std::vector<Rational>& v, int slot, int coord) const {
    return v[static_cast<std::size_t>(slot) * poly_.ambient_dim() + coord];
  }

  bool descend(int slot, int start_pos, int remaining,
               const std::function<bool(const std::vector<int>&)>& on_leaf) {
    const auto& list = lists_[static_cast<std::size_t>(slot)];
    const int rest_slots = n_ - slot - 1;
    const int d = poly_.ambient_dim();
    for (int p = multiset_ ? start_pos : 0; p < static_cast<int>(list.size()); ++p) {
      const int face_idx = list[static_cast<std::size_t>(p)];
      const int fd = dim_of(face_idx);
      if (fd > remaining) break;  // lists ascend in dimension
      const int rem2 = remaining - fd;
      const int min_rest = multiset_
                               ? rest_slots * fd
                               : static_cast<int>(suffix_min_[static_cast<std::size_t>(slot) + 1]);
      if (rem2 < min_rest) break;
      const int max_rest = multiset_
                               ? rest_slots * dim_of(list.back())
                               : static_cast<int>(suffix_max_[static_cast<std::size_t>(slot) + 1]);
      if (rem2 > max_rest) continue;

      current_[static_cast<std::size_t>(slot)] = face_idx;

      if (rest_slots == 0) {
        ++examined_;
        if (target_ && !leaf_box_contains(slot, face_idx)) continue;
        if (!on_leaf(current_)) return false;
        continue;
      }

      if (target_) {
        const Face& f = poly_.face(face_idx);
        const Part& part = (*parts_)[static_cast<std::size_t>(slot)];
        bool reachable = true;
        for (int c = 0; c < d; ++c) {
          at(partial_lo_, slot + 1, c) =
              at(partial_lo_, slot, c) + part.weight * f.box_min[c];
          at(partial_hi_, slot + 1, c) =
              at(partial_hi_, slot, c) + part.weight * f.box_max[c];
          const Rational& t = (*target_)[c];
          if (t < at(partial_lo_, slot + 1, c) + at(suffix_lo_, slot + 1, c) ||
              t > at(partial_hi_, slot + 1, c) + at(suffix_hi_, slot + 1, c)) {
            reachable = false;
            break;
          }
        }
        if (!reachable) continue;  // no completion can reach the target
      }

      if (!descend(slot + 1, p, rem2, on_leaf)) return false;
    }
    return true;
  }

  bool leaf_box_contains(int slot, int face_idx) {
    const Face& f = poly_.face(face_idx);
    const Part& part = (*parts_)[static_cast<std::size_t>(slot)];
    for (int c = 0; c < poly_.ambient_dim(); ++c) {
      const Rational lo = at(partial_lo_, slot, c) + part.weight * f.box_min[c];
      const Rational hi = at(partial_hi_, slot, c) + part.weight * f.box_max[c];
      if ((*target_)[c] < lo || (*target_)[c] > hi) return false;
    }
    return true;
  }

  const Polytope& poly_;
  const std::vector<std::vector<int>>& lists_;
  bool multiset_;
  int n_;
  bool viable_ = false;
  std::vector<long> suffix_min_, suffix_max_;
  std::vector<int> current_;
  std::uint64_t examined_ = 0;

  const std::vector<Part>* parts_ = nullptr;
  const Vec* target_ = nullptr;
  std::vector<Rational> suffix_lo_, suffix_hi_;
  std::vector<Rational> partial_lo_, partial_hi_;
};

// LP feasibility of one tuple; the interval pruning already happened in
// the search.
std::optional<DecompositionWitness> solve_tuple(const Polytope& poly,
                                                const std::vector<Part>& parts,
                                                const Vec& target,
                                                const std::vector<int>& faces) {
  auto res = feasible(tuple_lp(poly, parts, target, faces));
  if (!res.feasible()) return std::nullopt;

  DecompositionWitness w;
  const auto& x = *res.point;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Face& f = poly.face(faces[i]);
    const int nv = static_cast<int>(f.vertex_ids.size());
    std::vector<Rational> coeff(static_cast<std::size_t>(nv));
    Vec point = Vec::zero(poly.ambient_dim());
    for (int j = 0; j < nv; ++j) {
      coeff[static_cast<std::size_t>(j)] = x[offset + j];
      point = point + x[offset + j] * poly.vertex(f.vertex_ids[static_cast<std::size_t>(j)]);
    }
    offset += nv;
    w.points.push_back(std::move(point));
    w.carriers.push_back(f);
    w.coefficients.push_back(std::move(coeff));
  }
  return w;
}

DecomposeResult solve_direct(const DecompositionRequest& req, bool parallel,
                             int threads) {
  const Polytope& poly = *req.polytope;
  SearchSetup setup = make_setup(req);
  TupleSearch search(poly, setup.lists, setup.multiset);
  search.set_prune_target(req.parts, req.target);

  std::optional<DecompositionWitness> found;

  if (!parallel) {
    search.run([&](const std::vector<int>& tuple) {
      found = solve_tuple(poly, req.parts, req.target, tuple);
      return !found;
    });
  } else {
    int nthreads = threads > 0
                       ? threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    constexpr std::size_t kBatch = 512;
    std::vector<std::vector<int>> batch;
    std::mutex found_mutex;
    std::atomic<bool> stop{false};
    std::exception_ptr worker_error;

    auto flush = [&]() {
      std::atomic<std::size_t> cursor{0};
      auto worker = [&]() {
        try {
          for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::size_t i = cursor.fetch_add(1);
            if (i >= batch.size()) return;
            if (auto w = solve_tuple(poly, req.parts, req.target, batch[i])) {
              std::lock_guard<std::mutex> lock(found_mutex);
              if (!found) found = std::move(w);
              stop.store(true, std::memory_order_relaxed);
              return;
            }
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(found_mutex);
          if (!worker_error) worker_error = std::current_exception();
          stop.store(true, std::memory_order_relaxed);
        }
      };
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (worker_error) std::rethrow_exception(worker_error);
      batch.clear();
    };

    search.run([&](const std::vector<int>& tuple) {
      batch.push_back(tuple);
      if (batch.size() >= kBatch) {
        flush();
        return !found;
      }
      return true;
    });
    if (!found && !batch.empty()) flush();
  }

  if (found) {
    found->tuples_examined = search.examined();
    found->deterministic = !parallel;
    return *std::move(found);
  }
  if (setup.guaranteed)
    throw std::logic_error(
        "exhausted the tuple stream on a guaranteed-feasible instance");
  return InfeasibilityReport{search.examined(), true};
}

// Largest prime factor.
int largest_prime_factor(int n) {
  int best = 1;
  for (int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return std::max(best, n);
}

struct FactoredAccumulator {
  std::vector<Vec> points;
  std::vector<Face> carriers;
  std::vector<std::vector<Rational>> coefficients;
  std::uint64_t examined = 0;
};

// Splits n = a * b with a the largest prime factor; the outer stage uses
// the enlarged skeleton bound min(k*b, carrier dim), then each
// intermediate point is decomposed into b points of the k-skeleton inside
// its own carrier. Every stage satisfies the existence bound, so
// exhaustion anywhere is a defect.
void factored_recurse(const std::shared_ptr<const Polytope>& poly,
                      const Vec& target, int n, int k, bool parallel,
                      int threads, FactoredAccumulator& acc) {
  const int a = largest_prime_factor(n);
  const int b = n / a;

  if (b == 1) {
    auto res = solve_direct(
        DecompositionRequest::homogeneous(poly, target, n, k), parallel, threads);
    auto& w = std::get<DecompositionWitness>(res);
    acc.examined += w.tuples_examined;
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      acc.points.push_back(std::move(w.points[i]));
      acc.carriers.push_back(std::move(w.carriers[i]));
      acc.coefficients.push_back(std::move(w.coefficients[i]));
    }
    return;
  }

  const int carrier_dim = poly->carrier_face(target).dim;
  const int k_outer = std::min(k * b, carrier_dim);
  auto outer = solve_direct(
      DecompositionRequest::homogeneous(poly, target, a, k_outer), parallel,
      threads);
  auto& w = std::get<DecompositionWitness>(outer);
  acc.examined += w.tuples_examined;
  for (const auto& q : w.points)
    factored_recurse(poly, q, b, k, parallel, threads, acc);
}

DecomposeResult solve_factored(const DecompositionRequest& req, bool parallel,
                               int threads) {
  if (!parts_identical(req.parts))
    throw std::invalid_argument("factored strategy requires homogeneous parts");
  const int n = static_cast<int>(req.parts.size());
  if (largest_prime_factor(n) == n)
    throw std::invalid_argument("factored strategy requires composite n");
  const int k = req.parts.front().skeleton_dim;
  if (!req.polytope->contains(req.target))
    throw std::invalid_argument("target point lies outside the polytope");
  const int carrier_dim = req.polytope->carrier_face(req.target).dim;
  if (k * n < carrier_dim)
    throw std::invalid_argument(
        "factored strategy requires k*n >= carrier dimension");

  FactoredAccumulator acc;
  factored_recurse(req.polytope, req.target, n, k, parallel, threads, acc);

  DecompositionWitness w;
  w.points = std::move(acc.points);
  w.carriers = std::move(acc.carriers);
  w.coefficients = std::move(acc.coefficients);
  w.tuples_examined = acc.examined;
  w.deterministic = !parallel;
  return w;
}

}  // namespace

DecompositionRequest DecompositionRequest::homogeneous(
    std::shared_ptr<const Polytope> p, Vec target, int n, int k) {
  DecompositionRequest req;
  req.polytope = std::move(p);
  req.target = std::move(target);
  req.parts.assign(static_cast<std::size_t>(n), Part{k, Rational(1) / n});
  return req;
}

StandardLP tuple_lp(const Polytope& poly, const std::vector<Part>& parts,
                    const Vec& target, const std::vector<int>& tuple_faces) {
  const int d = poly.ambient_dim();
  const int n = static_cast<int>(parts.size());
  int vars = 0;
  for (int i = 0; i < n; ++i)
    vars += static_cast<int>(poly.face(tuple_faces[static_cast<std::size_t>(i)]).vertex_ids.size());

  Mat A(d + n, vars);
  int offset = 0;
  for (int i = 0; i < n; ++i) {
    const Face& f = poly.face(tuple_faces[static_cast<std::size_t>(i)]);
    for (int j = 0; j < static_cast<int>(f.vertex_ids.size()); ++j) {
      const Vec& v = poly.vertex(f.vertex_ids[static_cast<std::size_t>(j)]);
      for (int c = 0; c < d; ++c)
        A(c, offset + j) = parts[static_cast<std::size_t>(i)].weight * v[c];
      A(d + i, offset + j) = 1;
    }
    offset += static_cast<int>(f.vertex_ids.size());
  }
  std::vector<Rational> rhs(target.coords());
  for (int i = 0; i < n; ++i) rhs.push_back(1);
  return StandardLP{std::move(A), Vec(std::move(rhs))};
}

std::optional<Vec> interval_farkas(const Polytope& poly,
                                   const std::vector<Part>& parts,
                                   const Vec& target,
                                   const std::vector<int>& tuple_faces) {
  auto hit = interval_prune(poly, parts, target, tuple_faces);
  if (!hit) return std::nullopt;
  const int d = poly.ambient_dim();
  const int n = static_cast<int>(parts.size());
  std::vector<Rational> y(static_cast<std::size_t>(d + n));
  const int c = hit->coord;
  for (int i = 0; i < n; ++i) {
    const Face& f = poly.face(tuple_faces[static_cast<std::size_t>(i)]);
    if (hit->upper)
      y[static_cast<std::size_t>(d + i)] = -parts[static_cast<std::size_t>(i)].weight * f.box_max[c];
    else
      y[static_cast<std::size_t>(d + i)] = parts[static_cast<std::size_t>(i)].weight * f.box_min[c];
  }
  y[static_cast<std::size_t>(c)] = hit->upper ? 1 : -1;
  return Vec(std::move(y));
}

DecomposeResult decompose(const DecompositionRequest& req,
                          const SolveOptions& options) {
  validate_request(req);
  if (options.strategy == Strategy::Factored)
    return solve_factored(req, options.parallel, options.threads);
  return solve_direct(req, options.parallel, options.threads);
}

DecomposeResult decompose_general(const DecompositionRequest& req) {
  validate_request(req);
  return solve_direct(req, false, 0);
}

std::uint64_t count_tuples(const DecompositionRequest& req) {
  validate_request(req);
  SearchSetup setup = make_setup(req);
  TupleSearch search(*req.polytope, setup.lists, setup.multiset);
  search.run([](const std::vector<int>&) { return true; });
  return search.examined();
}

bool check_witness(const DecompositionRequest& req,
                   const DecompositionWitness& w) {
  const std::size_t n = req.parts.size();
  if (!req.polytope) return false;
  if (w.points.size() != n || w.carriers.size() != n ||
      w.coefficients.size() != n)
    return false;
  const Polytope& poly = *req.polytope;

  Vec combo = Vec::zero(poly.ambient_dim());
  for (std::size_t i = 0; i < n; ++i) {
    const Face& claimed = w.carriers[i];
    int idx;
    try {
      idx = poly.face_index(claimed.mask);
    } catch (const std::invalid_argument&) {
      return false;
    }
    const Face& lattice_face = poly.face(idx);
    if (lattice_face.vertex_ids != claimed.vertex_ids) return false;
    if (lattice_face.dim > req.parts[i].skeleton_dim) return false;

    const auto& coeff = w.coefficients[i];
    if (coeff.size() != claimed.vertex_ids.size()) return false;
    Rational sum = 0;
    Vec point = Vec::zero(poly.ambient_dim());
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (coeff[j] < 0) return false;
      sum += coeff[j];
      point = point + coeff[j] * poly.vertex(claimed.vertex_ids[j]);
    }
    if (sum != 1) return false;
    if (point != w.points[i]) return false;
    combo = combo + req.parts[i].weight * w.points[i];
  }
  return combo == req.target;
}

IntersectionInfo intersection_info(const Polytope& poly,
                                   const std::vector<int>& face_indices,
                                   const std::vector<Rational>& weights) {
  if (face_indices.size() != weights.size())
    throw std::invalid_argument("faces and weights sizes differ");
  if (face_indices.empty()) throw std::invalid_argument("no faces given");
  for (const auto& w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  for (int idx : face_indices)
    if (idx < 0 || idx >= static_cast<int>(poly.faces().size()))
      throw std::invalid_argument("face index out of range");

  std::vector<Part> parts;
  parts.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    parts.push_back(Part{poly.dim(), weights[i]});
  const Vec origin = Vec::zero(poly.ambient_dim());

  IntersectionInfo info;
  std::vector<int> current = face_indices;
  for (;;) {
    for (int idx : current)
      if (poly.face(idx).dim < 0) return info;  // empty face: empty set

    StandardLP lp = tuple_lp(poly, parts, origin, current);
    if (!feasible(lp).feasible()) return info;

    const int vars = lp.A.cols();
    std::vector<int> all_columns(static_cast<std::size_t>(vars));
    for (int j = 0; j < vars; ++j) all_columns[static_cast<std::size_t>(j)] = j;
    auto ms = max_slack(lp, all_columns);

    if (ms.slack > 0) {
      // Relative interiors met: dimension of the affine solution space on
      // the product of affine hulls.
      int total_dim = 0;
      for (int idx : current) total_dim += poly.face(idx).dim;
      Mat stacked(poly.ambient_dim(), total_dim);
      int col = 0;
      for (std::size_t i = 0; i < current.size(); ++i) {
        const Face& f = poly.face(current[i]);
        for (const Vec& u : f.hull.basis) {
          for (int r = 0; r < poly.ambient_dim(); ++r)
            stacked(r, col) = weights[i] * u[r];
          ++col;
        }
      }
      info.empty = false;
      info.dim = total_dim - rank(stacked);
      info.final_faces = current;
      return info;
    }

    // Degenerate: some coefficient is identically zero over the set. The
    // per-column maxima identify exactly the vertex sets of the carrier
    // subfaces, which must shrink at least one face.
    std::vector<int> next;
    next.reserve(current.size());
    int col = 0;
    bool shrank = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Face& f = poly.face(current[i]);
      VertexMask used = 0;
      for (std::size_t j = 0; j < f.vertex_ids.size(); ++j) {
        auto one = max_slack(lp, {col});
        if (one.slack > 0)
          used |= VertexMask{1} << f.vertex_ids[j];
        ++col;
      }
      const int sub = poly.face_index(used);
      if (used != f.mask) shrank = true;
      next.push_back(sub);
    }
    if (!shrank)
      throw std::logic_error("degenerate intersection failed to shrink");
    current = std::move(next);
    info.degenerate = true;
  }
}

std::optional<int> intersection_dimension(const Polytope& poly,
                                          const std::vector<int>& face_indices,
                                          const std::vector<Rational>& weights) {
  auto info = intersection_info(poly, face_indices, weights);
  if (info.empty) return std::nullopt;
  return info.dim;
}

DimInequalityReport verify_dimension_inequality(const Polytope& poly, int n,
                                                int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and k >= 0");
  if (k * n < poly.dim())
    throw std::invalid_argument("verify_dimension_inequality needs k*n >= dim");

  // Re-center on the vertex centroid so the origin is interior.
  Vec centroid = Vec::zero(poly.ambient_dim());
  for (const auto& v : poly.vertices()) centroid = centroid + v;
  centroid = (Rational(1) / static_cast<int>(poly.vertices().size())) * centroid;
  std::vector<Vec> shifted;
  shifted.reserve(poly.vertices().size());
  for (const auto& v : poly.vertices()) shifted.push_back(v - centroid);
  Polytope centered = Polytope::build(shifted, poly.name());

  std::vector<int> big_faces;
  for (int i = 0; i < static_cast<int>(centered.faces().size()); ++i)
    if (centered.face(i).dim >= k + 1) big_faces.push_back(i);

  DimInequalityReport report;
  report.bound = n * (k + 1) - centered.dim();
  if (big_faces.empty()) return report;

  const std::vector<Rational> weights(static_cast<std::size_t>(n),
                                      Rational(1) / n);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n), big_faces);
  TupleSearch search(centered, lists, true);
  search.run([&](const std::vector<int>& tuple) {
    ++report.tuples_total;
    auto info = intersection_info(centered, tuple, weights);
    if (info.empty || info.degenerate) return true;
    ++report.tuples_certified;
    if (info.dim < report.bound) ++report.violations;
    return true;
  });
  return report;
}

}  // namespace skelbary
