#include <benchmark/benchmark.h>

#include "skelbary/experiment.hpp"
#include "skelbary/solver.hpp"
#include "skelbary/testmap.hpp"

using namespace skelbary;

namespace {

std::shared_ptr<const Polytope> cube(int d) {
  static std::map<int, std::shared_ptr<const Polytope>> cache;
  auto it = cache.find(d);
  if (it == cache.end())
    it = cache.emplace(d, std::make_shared<const Polytope>(
                              generate(GeneratorKind::Cube, d, 0))).first;
  return it->second;
}

void BM_BuildCubeLattice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Polytope p = generate(GeneratorKind::Cube, d, 0);
    benchmark::DoNotOptimize(p.faces().size());
  }
}
BENCHMARK(BM_BuildCubeLattice)->Arg(2)->Arg(3)->Arg(4);

void BM_DecomposeCubeCenter(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto poly = cube(d);
  auto req = DecompositionRequest::homogeneous(poly, Vec::zero(d), d, 1);
  for (auto _ : state) {
    auto result = decompose(req);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_DecomposeCubeCenter)->Arg(2)->Arg(3)->Arg(4);

void BM_TupleLPFeasibility(benchmark::State& state) {
  auto poly = cube(3);
  std::vector<Part> parts(3, Part{1, Rational(1) / 3});
  auto skel = poly->skeleton_face_indices(1);
  std::vector<int> tuple{skel[8], skel[12], skel[19]};
  const Vec target = Vec::zero(3);
  for (auto _ : state) {
    auto lp = tuple_lp(*poly, parts, target, tuple);
    benchmark::DoNotOptimize(feasible(lp));
  }
}
BENCHMARK(BM_TupleLPFeasibility);

void BM_IntersectionDimension(benchmark::State& state) {
  auto poly = cube(3);
  const int full = poly->face_index(poly->full_face().mask);
  std::vector<int> faces(3, full);
  std::vector<Rational> w(3, Rational(1) / 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(intersection_dimension(*poly, faces, w));
}
BENCHMARK(BM_IntersectionDimension);

void BM_SkeletonDistance(benchmark::State& state) {
  auto poly = cube(3);
  const Vec x{Rational(1) / 3, Rational(-1) / 5, Rational(1) / 7};
  for (auto _ : state)
    benchmark::DoNotOptimize(dist_to_skeleton(x, *poly, 1));
}
BENCHMARK(BM_SkeletonDistance);

}  // namespace

BENCHMARK_MAIN();
