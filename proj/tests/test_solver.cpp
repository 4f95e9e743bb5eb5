#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "skelbary/generators.hpp"
#include "skelbary/json_io.hpp"
#include "skelbary/solver.hpp"

using namespace skelbary;

namespace {

Vec qv(const std::string& csv) { return parse_point(csv); }

std::shared_ptr<const Polytope> shared(Polytope p) {
  return std::make_shared<const Polytope>(std::move(p));
}

std::shared_ptr<const Polytope> unit_square() {
  return shared(Polytope::build({qv("-1,-1"), qv("1,-1"), qv("-1,1"), qv("1,1")}));
}

// Full-product enumeration with an LP per tuple and no pruning of any
// kind; the slow but obviously-correct route.
bool feasible_by_ordered_enumeration(const DecompositionRequest& req) {
  const Polytope& poly = *req.polytope;
  const Face& carrier = poly.carrier_face(req.target);
  std::vector<std::vector<int>> lists;
  for (const auto& part : req.parts)
    lists.push_back(poly.skeleton_face_indices(part.skeleton_dim, carrier.mask));
  std::vector<int> tuple(req.parts.size(), 0);
  for (;;) {
    std::vector<int> faces;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      faces.push_back(lists[i][static_cast<std::size_t>(tuple[i])]);
    if (feasible(tuple_lp(poly, req.parts, req.target, faces)).feasible())
      return true;
    std::size_t slot = tuple.size();
    while (slot > 0) {
      --slot;
      if (++tuple[slot] < static_cast<int>(lists[slot].size())) break;
      tuple[slot] = 0;
      if (slot == 0) return false;
    }
  }
}

}  // namespace

TEST_CASE("segment midpoint splits into the two endpoints") {
  auto seg = shared(Polytope::build({qv("0"), qv("1")}));
  auto req = DecompositionRequest::homogeneous(seg, qv("1/2"), 2, 0);
  auto result = decompose(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  std::vector<Vec> pts = w->points;
  std::sort(pts.begin(), pts.end());
  CHECK(pts[0] == qv("0"));
  CHECK(pts[1] == qv("1"));
}

TEST_CASE("square center is not on the boundary: n=1, k=1 is infeasible") {
  auto req = DecompositionRequest::homogeneous(unit_square(), qv("0,0"), 1, 1);
  auto result = decompose(req);
  auto* rep = std::get_if<InfeasibilityReport>(&result);
  REQUIRE(rep);
  CHECK(rep->all_certified);
  CHECK(rep->tuples_examined == 8);  // 4 vertices + 4 edges
}

TEST_CASE("3-cube center from three edge points") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("0,0,0"), 3, 1);
  auto result = decompose(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  for (const auto& f : w->carriers) CHECK(f.dim <= 1);
  Vec sum = Vec::zero(3);
  for (const auto& p : w->points) sum = sum + p;
  CHECK(sum.is_zero());
}

TEST_CASE("pruned multiset search decides like full ordered enumeration") {
  // small instances where the brute-force product search is affordable
  struct Case {
    std::shared_ptr<const Polytope> poly;
    Vec target;
    int n, k;
  };
  std::vector<Case> cases;
  cases.push_back({unit_square(), qv("0,0"), 2, 1});
  cases.push_back({unit_square(), qv("0,0"), 2, 0});
  cases.push_back({unit_square(), qv("1/3,1/5"), 2, 1});
  cases.push_back({unit_square(), qv("1,0"), 1, 1});
  cases.push_back({shared(generate(GeneratorKind::Cube, 3, 0)), qv("0,0,0"), 3, 1});
  cases.push_back({shared(generate(GeneratorKind::CrossPolytope, 2, 0)), qv("1/7,1/9"), 2, 1});

  for (const auto& c : cases) {
    auto req = DecompositionRequest::homogeneous(c.poly, c.target, c.n, c.k);
    const bool fast = std::holds_alternative<DecompositionWitness>(decompose(req));
    const bool slow = feasible_by_ordered_enumeration(req);
    CHECK(fast == slow);
  }
}

TEST_CASE("decompose_general: the full face carries the target itself") {
  auto sq = unit_square();
  DecompositionRequest req{sq, qv("0,0"), {Part{2, Rational(1)}}};
  auto result = decompose_general(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  CHECK(w->points[0] == qv("0,0"));
  CHECK(w->carriers[0].dim == 2);
}

TEST_CASE("decompose_general: center from two opposite vertices") {
  auto sq = unit_square();
  DecompositionRequest req{
      sq, qv("0,0"), {Part{0, Rational(1) / 2}, Part{0, Rational(1) / 2}}};
  auto result = decompose_general(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  CHECK(w->points[0] + w->points[1] == qv("0,0"));
  CHECK(w->points[0] != w->points[1]);
}

TEST_CASE("decompose_general agrees with the closed-form vertex-edge oracle") {
  auto sq = unit_square();
  const Vec target = qv("1/2,0");
  DecompositionRequest req{
      sq, target, {Part{0, Rational(1) / 4}, Part{1, Rational(3) / 4}}};

  // oracle: p = v/4 + 3x/4 with v a vertex, x on an edge (or a vertex);
  // x = (4p - v)/3 must land in the face
  bool oracle_feasible = false;
  for (const auto& v : sq->vertices()) {
    Vec x = Rational(1) / 3 * (Rational(4) * target - v);
    for (int idx : sq->skeleton_face_indices(1))
      if (sq->face_membership(sq->face(idx), x)) oracle_feasible = true;
  }

  auto result = decompose_general(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  CHECK(oracle_feasible == (w != nullptr));
  if (w) CHECK(check_witness(req, *w));
}

TEST_CASE("factored strategy: n=4 on the square, two stages of halving") {
  auto sq = unit_square();
  auto req = DecompositionRequest::homogeneous(sq, qv("0,0"), 4, 1);
  auto result = decompose(req, SolveOptions{Strategy::Factored});
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  for (const auto& f : w->carriers) CHECK(f.dim <= 1);
}

TEST_CASE("factored and direct agree whenever the theorem guarantees both") {
  auto cube = shared(generate(GeneratorKind::Cube, 2, 0));
  for (const char* target : {"0,0", "1/3,-2/5", "1,1/2"}) {
    auto req = DecompositionRequest::homogeneous(cube, qv(target), 4, 1);
    auto direct = decompose(req);
    auto factored = decompose(req, SolveOptions{Strategy::Factored});
    auto* dw = std::get_if<DecompositionWitness>(&direct);
    auto* fw = std::get_if<DecompositionWitness>(&factored);
    REQUIRE(dw);
    REQUIRE(fw);
    CHECK(check_witness(req, *dw));
    CHECK(check_witness(req, *fw));
  }
}

TEST_CASE("factored n=6 on the 3-cube beats the direct worst case") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("0,0,0"), 6, 1);
  auto result = decompose(req, SolveOptions{Strategy::Factored});
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  CHECK(w->tuples_examined < count_tuples(req));
}

TEST_CASE("factored strategy input errors") {
  auto sq = unit_square();
  auto prime = DecompositionRequest::homogeneous(sq, qv("0,0"), 3, 1);
  CHECK_THROWS_AS(decompose(prime, SolveOptions{Strategy::Factored}),
                  std::invalid_argument);
  DecompositionRequest hetero{
      sq, qv("0,0"), {Part{1, Rational(1) / 2}, Part{0, Rational(1) / 4},
                      Part{0, Rational(1) / 8}, Part{0, Rational(1) / 8}}};
  CHECK_THROWS_AS(decompose(hetero, SolveOptions{Strategy::Factored}),
                  std::invalid_argument);
}

TEST_CASE("target outside the polytope is rejected") {
  auto req = DecompositionRequest::homogeneous(unit_square(), qv("2,0"), 2, 1);
  CHECK_THROWS_AS(decompose(req), std::invalid_argument);
}

TEST_CASE("boundary targets reduce to the carrier face") {
  auto sq = unit_square();
  // midpoint of the x=1 edge: average of that edge's endpoints
  auto mid = DecompositionRequest::homogeneous(sq, qv("1,0"), 2, 0);
  auto res = decompose(mid);
  auto* w = std::get_if<DecompositionWitness>(&res);
  REQUIRE(w);
  for (const auto& p : w->points) CHECK(p[0] == 1);

  // an off-center edge point is not an average of two edge vertices
  auto off = DecompositionRequest::homogeneous(sq, qv("1,1/3"), 2, 0);
  auto res2 = decompose(off);
  CHECK(std::holds_alternative<InfeasibilityReport>(res2));

  // but k=1 keeps it inside the edge (carrier dim 1, k*n >= 1)
  auto res3 = decompose(DecompositionRequest::homogeneous(sq, qv("1,1/3"), 2, 1));
  auto* w3 = std::get_if<DecompositionWitness>(&res3);
  REQUIRE(w3);
  for (const auto& p : w3->points) CHECK(p[0] == 1);
}

TEST_CASE("a vertex target yields n copies of the vertex") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("1,1,1"), 3, 1);
  auto result = decompose(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  for (const auto& p : w->points) CHECK(p == qv("1,1,1"));
  for (const auto& f : w->carriers) CHECK(f.dim == 0);
}

TEST_CASE("heterogeneous parts also reduce to the carrier face") {
  auto sq = unit_square();
  // target inside the x=1 edge; all points must stay on that edge
  DecompositionRequest req{
      sq, qv("1,1/4"), {Part{0, Rational(1) / 3}, Part{1, Rational(2) / 3}}};
  auto result = decompose_general(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  for (const auto& p : w->points) CHECK(p[0] == 1);
}

TEST_CASE("check_witness rejects every nonzero single-coefficient nudge") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("1/3,-1/5,1/7"), 3, 2);
  auto result = decompose(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  REQUIRE(check_witness(req, *w));

  Rng rng(404);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    DecompositionWitness copy = *w;
    const std::size_t i = rng.below(copy.coefficients.size());
    const std::size_t j = rng.below(copy.coefficients[i].size());
    const Rational eps = Rational(rng.range(-20, 20)) / 1000;
    copy.coefficients[i][j] += eps;
    const bool ok = check_witness(req, copy);
    if (eps == 0)
      CHECK(ok);
    else
      CHECK_FALSE(ok);
    rejected += !ok;
  }
  CHECK(rejected > 50);

  // moving a point off its carrier also fails
  DecompositionWitness moved = *w;
  moved.points[0] = moved.points[0] + qv("1/9,0,0");
  CHECK_FALSE(check_witness(req, moved));
}

TEST_CASE("witness JSON is deterministic byte for byte") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("1/3,0,-1/4"), 3, 1);
  auto a = decompose(req);
  auto b = decompose(req);
  auto* wa = std::get_if<DecompositionWitness>(&a);
  auto* wb = std::get_if<DecompositionWitness>(&b);
  REQUIRE(wa);
  REQUIRE(wb);
  CHECK(witness_to_json(*wa).dump() == witness_to_json(*wb).dump());
}

TEST_CASE("parallel mode returns some valid witness flagged nondeterministic") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  auto req = DecompositionRequest::homogeneous(cube, qv("1/3,0,-1/4"), 3, 1);
  SolveOptions opts;
  opts.parallel = true;
  opts.threads = 4;
  auto result = decompose(req, opts);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  CHECK_FALSE(w->deterministic);
}

TEST_CASE("interval-pruned tuples carry a verifying Farkas vector") {
  auto cube = shared(generate(GeneratorKind::Cube, 3, 0));
  const Vec target = qv("2/3,1/5,0");
  std::vector<Part> parts(2, Part{1, Rational(1) / 2});
  auto skel = cube->skeleton_face_indices(1);
  Rng rng(8);
  int pruned = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> tuple{skel[rng.below(skel.size())],
                           skel[rng.below(skel.size())]};
    auto y = interval_farkas(*cube, parts, target, tuple);
    if (!y) continue;
    ++pruned;
    CHECK(verify_farkas(tuple_lp(*cube, parts, target, tuple), *y));
  }
  CHECK(pruned > 0);
}

TEST_CASE("every witness on random instances passes the checker") {
  Rng rng(9090);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int d = 2 + static_cast<int>(seed % 2);
    auto poly = shared(generate(GeneratorKind::RandomHull, d, seed));
    const int n = static_cast<int>(rng.range(1, 3));
    const int k = static_cast<int>(rng.range(1, d));
    Vec target = random_interior_point(*poly, rng);
    auto req = DecompositionRequest::homogeneous(poly, target, n, k);
    auto result = decompose(req);
    if (auto* w = std::get_if<DecompositionWitness>(&result)) {
      CHECK(check_witness(req, *w));
    } else {
      CHECK(std::get<InfeasibilityReport>(result).all_certified);
      CHECK(k * n < d);  // exhaustion only without the theorem guarantee
    }
  }
}

TEST_CASE("decomposition works on a flat polytope embedded in 3-space") {
  auto flat = shared(Polytope::build(
      {qv("0,0,0"), qv("1,0,1"), qv("0,1,1"), qv("1,1,2")}, "flat"));
  REQUIRE(flat->dim() == 2);

  // centroid of the parallelogram from two skeleton points
  auto req = DecompositionRequest::homogeneous(flat, qv("1/2,1/2,1"), 2, 1);
  auto result = decompose(req);
  auto* w = std::get_if<DecompositionWitness>(&result);
  REQUIRE(w);
  CHECK(check_witness(req, *w));
  for (const auto& f : w->carriers) CHECK(f.dim <= 1);

  // boundary target reduces into an edge of the embedded polytope
  const Vec edge_point = qv("1/3,0,1/3");
  auto req2 = DecompositionRequest::homogeneous(flat, edge_point, 2, 1);
  auto res2 = decompose(req2);
  auto* w2 = std::get_if<DecompositionWitness>(&res2);
  REQUIRE(w2);
  CHECK(check_witness(req2, *w2));
  for (const auto& p : w2->points) CHECK(p[1] == 0);  // stays on the edge

  // factored strategy through the same chart
  auto req4 = DecompositionRequest::homogeneous(flat, qv("1/2,1/2,1"), 4, 1);
  auto res4 = decompose(req4, SolveOptions{Strategy::Factored});
  auto* w4 = std::get_if<DecompositionWitness>(&res4);
  REQUIRE(w4);
  CHECK(check_witness(req4, *w4));
}

TEST_CASE("intersection dimension with unequal weights") {
  auto sq = unit_square();
  const int full = sq->face_index(sq->full_face().mask);
  const std::vector<Rational> w{Rational(1) / 3, Rational(2) / 3};

  // x2 = -x1/2 stays inside the square: a 2-dimensional section
  auto info = intersection_info(*sq, {full, full}, w);
  CHECK_FALSE(info.empty);
  CHECK_FALSE(info.degenerate);
  CHECK(info.dim == 2);

  // opposite vertical edges cannot balance under unequal weights
  const int left = sq->face_index(sq->carrier_face(qv("-1,0")).mask);
  const int right = sq->face_index(sq->carrier_face(qv("1,0")).mask);
  CHECK(intersection_info(*sq, {left, right}, w).empty);
}

TEST_CASE("intersection dimension on the square") {
  auto sq = unit_square();
  const std::vector<Rational> half{Rational(1) / 2, Rational(1) / 2};
  const int full = sq->face_index(sq->full_face().mask);

  SUBCASE("full x full has dimension (n-1)d = 2") {
    auto info = intersection_info(*sq, {full, full}, half);
    CHECK_FALSE(info.empty);
    CHECK_FALSE(info.degenerate);
    CHECK(info.dim == 2);
  }

  SUBCASE("opposite edges leave one free parameter") {
    const int left = sq->face_index(sq->carrier_face(qv("-1,0")).mask);
    const int right = sq->face_index(sq->carrier_face(qv("1,0")).mask);
    auto info = intersection_info(*sq, {left, right}, half);
    CHECK_FALSE(info.empty);
    CHECK(info.dim == 1);
  }

  SUBCASE("adjacent edges pin both points: dimension 0 via degeneration") {
    const int left = sq->face_index(sq->carrier_face(qv("-1,0")).mask);
    const int bottom = sq->face_index(sq->carrier_face(qv("0,-1")).mask);
    auto info = intersection_info(*sq, {left, bottom}, half);
    CHECK_FALSE(info.empty);
    CHECK(info.dim == 0);
    CHECK(info.degenerate);
    // degenerates to the vertex pair (-1,1), (1,-1)
    REQUIRE(info.final_faces.size() == 2);
    CHECK(sq->face(info.final_faces[0]).dim == 0);
    CHECK(sq->face(info.final_faces[1]).dim == 0);
    CHECK(sq->vertex(sq->face(info.final_faces[0]).vertex_ids[0]) == qv("-1,1"));
    CHECK(sq->vertex(sq->face(info.final_faces[1]).vertex_ids[0]) == qv("1,-1"));
  }

  SUBCASE("disjoint scaled configuration can be empty") {
    const int corner = sq->face_index(sq->carrier_face(qv("1,1")).mask);
    auto info = intersection_info(*sq, {corner, corner}, half);
    CHECK(info.empty);
    CHECK_FALSE(intersection_dimension(*sq, {corner, corner}, half).has_value());
  }
}

TEST_CASE("C = P^n cap W has dimension (n-1) dim P for centered polytopes") {
  for (auto kind : {GeneratorKind::Cube, GeneratorKind::CrossPolytope}) {
    for (int d = 2; d <= 3; ++d) {
      auto poly = shared(generate(kind, d, 0));
      const int full = poly->face_index(poly->full_face().mask);
      for (int n = 2; n <= 3; ++n) {
        std::vector<int> faces(static_cast<std::size_t>(n), full);
        std::vector<Rational> w(static_cast<std::size_t>(n), Rational(1) / n);
        auto dim = intersection_dimension(*poly, faces, w);
        REQUIRE(dim.has_value());
        CHECK(*dim == (n - 1) * d);
      }
    }
  }
}

TEST_CASE("face-dimension inequality sweeps report no violations") {
  Polytope sq = Polytope::build({qv("-1,-1"), qv("1,-1"), qv("-1,1"), qv("1,1")});
  auto rep = verify_dimension_inequality(sq, 2, 1);
  CHECK(rep.bound == 2);
  CHECK(rep.tuples_total == 1);  // only (P, P)
  CHECK(rep.tuples_certified == 1);
  CHECK(rep.violations == 0);

  Polytope cube = generate(GeneratorKind::Cube, 3, 0);
  auto rep3 = verify_dimension_inequality(cube, 3, 1);
  CHECK(rep3.bound == 3);
  CHECK(rep3.tuples_total == 84);  // multisets of 3 from 6 facets + P
  CHECK(rep3.violations == 0);
  CHECK(rep3.tuples_certified > 0);

  CHECK_THROWS_AS(verify_dimension_inequality(cube, 2, 1),  // k*n < d
                  std::invalid_argument);
}

TEST_CASE("intersection input validation") {
  auto sq = unit_square();
  const std::vector<Rational> half{Rational(1) / 2, Rational(1) / 2};
  CHECK_THROWS_AS(intersection_info(*sq, {0}, half), std::invalid_argument);
  CHECK_THROWS_AS(intersection_info(*sq, {0, 99}, half), std::invalid_argument);
  CHECK_THROWS_AS(
      intersection_info(*sq, {0, 1}, {Rational(1) / 2, Rational(-1) / 2}),
      std::invalid_argument);
}
