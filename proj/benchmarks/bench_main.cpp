#include <benchmark/benchmark.h>

#include "semibounded/convex.hpp"
#include "semibounded/fock.hpp"
#include "semibounded/symplectic.hpp"
#include "semibounded/verma.hpp"
#include "semibounded/virasoro.hpp"

using namespace semibounded;

static void BM_Compose(benchmark::State& state) {
  Rng rng(1);
  const int degree = static_cast<int>(state.range(0));
  const auto phi = circle::random_diffeo(rng, degree), psi = circle::random_diffeo(rng, degree);
  for (auto _ : state) benchmark::DoNotOptimize(circle::compose(phi, psi, degree));
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(32)->Arg(64);

static void BM_AdjointAction(benchmark::State& state) {
  Rng rng(2);
  const auto phi = circle::random_diffeo(rng);
  const auto x = virasoro::from_cartan({0.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(virasoro::adjoint_action(phi, x));
}
BENCHMARK(BM_AdjointAction);

static void BM_OrbitInvariants(benchmark::State& state) {
  Rng rng(3);
  auto f = circle::random_real_function(rng, 3, 32, 0.15);
  f.set_coeff(0, 1.5);
  const virasoro::VirasoroElement x{0.0, {f}};
  for (auto _ : state) benchmark::DoNotOptimize(virasoro::orbit_invariants(x));
}
BENCHMARK(BM_OrbitInvariants);

static void BM_VermaGramExact(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto g = virasoro::verma_gram<virasoro::Rational>(level, virasoro::Rational(1, 2), virasoro::Rational(1, 16));
    benchmark::DoNotOptimize(virasoro::determinant(g));
  }
}
BENCHMARK(BM_VermaGramExact)->DenseRange(2, 6, 2);

static void BM_FockSpace(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::FockSpace::bosonic(3, cutoff));
}
BENCHMARK(BM_FockSpace)->Arg(4)->Arg(8)->Arg(12);

static void BM_Weyl(benchmark::State& state) {
  const auto space = fock::FockSpace::bosonic(1, static_cast<int>(state.range(0)));
  const ComplexVector f = ComplexVector::Constant(1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(fock::weyl(space, 0.0, f));
}
BENCHMARK(BM_Weyl)->Arg(16)->Arg(32);

static void BM_VacuumImplementer(benchmark::State& state) {
  const auto space = fock::FockSpace::bosonic(1, static_cast<int>(state.range(0)));
  const RealLinearMap g(ComplexMatrix::Constant(1, 1, std::cosh(0.5)), ComplexMatrix::Constant(1, 1, std::sinh(0.5)));
  for (auto _ : state) benchmark::DoNotOptimize(fock::vacuum_implementer(space, g));
}
BENCHMARK(BM_VacuumImplementer)->Arg(20)->Arg(40);

static void BM_PositiveComplexStructure(benchmark::State& state) {
  Rng rng(4);
  const auto A = symplectic::random_cone_element(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symplectic::positive_complex_structure(A));
}
BENCHMARK(BM_PositiveComplexStructure)->Arg(2)->Arg(4)->Arg(8);

static void BM_DualCone(benchmark::State& state) {
  Rng rng(5);
  const int n = static_cast<int>(state.range(0));
  std::vector<Eigen::VectorXd> gens;
  for (int i = 0; i < 2 * n; ++i) gens.push_back(Eigen::VectorXd::NullaryExpr(n, [&] { return rng.normal(); }));
  const auto C = convex::PolyCone::generated(gens, n);
  for (auto _ : state) benchmark::DoNotOptimize(convex::dual_cone(C));
}
BENCHMARK(BM_DualCone)->DenseRange(2, 5);

BENCHMARK_MAIN();
