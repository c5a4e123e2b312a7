#include <benchmark/benchmark.h>

#include "forge/analysis.hpp"
#include "forge/graded.hpp"
#include "forge/groebner.hpp"
#include "forge/morphism.hpp"
#include "forge/poly_text.hpp"

using namespace forge;

namespace {

IntMatrix random_int_matrix(Rng& rng, int n, int mag) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Int(static_cast<long>(rng.uniform(-mag, mag)));
  return m;
}

LaurentPoly random_dense(Rng& rng, int arity, int degree) {
  LaurentPoly p(arity);
  for (int t = 0; t < 12; ++t) {
    ExponentVec e(static_cast<size_t>(arity), 0);
    for (int s = 0; s < degree; ++s) e[static_cast<size_t>(rng.uniform(0, arity - 1))] += 1;
    p.add_term(e, Scalar(rng.small_rational(9)));
  }
  return p;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  Rng rng(1);
  int n = static_cast<int>(state.range(0));
  IntMatrix m = random_int_matrix(rng, n, 30);
  for (auto _ : state) {
    auto snf = smith_normal_form(m);
    benchmark::DoNotOptimize(snf.d);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_DetBareiss(benchmark::State& state) {
  Rng rng(2);
  int n = static_cast<int>(state.range(0));
  IntMatrix m = random_int_matrix(rng, n, 100);
  for (auto _ : state) benchmark::DoNotOptimize(det_int(m));
}
BENCHMARK(BM_DetBareiss)->Arg(6)->Arg(12)->Arg(16);

static void BM_PolyMul(benchmark::State& state) {
  Rng rng(3);
  LaurentPoly f = random_dense(rng, 3, static_cast<int>(state.range(0)));
  LaurentPoly g = random_dense(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8);

static void BM_JacobianBracket(benchmark::State& state) {
  Rng rng(4);
  auto s = PoissonStructure::potential_affine(parse_poly("x^5+y^5+z^5", 3));
  LaurentPoly f = random_dense(rng, 3, 4);
  LaurentPoly g = random_dense(rng, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(s, f, g));
}
BENCHMARK(BM_JacobianBracket);

static void BM_QuotientNormalForm(benchmark::State& state) {
  Rng rng(5);
  auto q = PotentialQuotientStructure{parse_poly("x^5+y^5+z^5", 3), Rat(1), MonomialOrder{}};
  LaurentPoly f = random_dense(rng, 3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form_mod(q, f));
}
BENCHMARK(BM_QuotientNormalForm);

static void BM_GroebnerJacobianIdeal(benchmark::State& state) {
  LaurentPoly omega = parse_poly("x^5+y^5+z^5+x*y*z^3+2*x^2*y^3", 3);
  std::vector<LaurentPoly> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(partial_derivative(omega, i));
  for (auto _ : state) {
    auto gb = groebner_basis(gens, MonomialOrder{});
    benchmark::DoNotOptimize(gb.generators);
  }
}
BENCHMARK(BM_GroebnerJacobianIdeal);

static void BM_IsolatedSingularity(benchmark::State& state) {
  LaurentPoly omega = parse_poly("x^5+y^5+z^5", 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_isolated_singularity(omega));
}
BENCHMARK(BM_IsolatedSingularity);

static void BM_TruncatedCenter(benchmark::State& state) {
  auto s = PoissonStructure::potential_affine(parse_poly("x^5+y^5+z^5", 3));
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_center(s, bound));
}
BENCHMARK(BM_TruncatedCenter)->Arg(4)->Arg(5);

static void BM_AxiomSweep(benchmark::State& state) {
  SkewParamMatrix torus2(2);
  torus2.set(0, 1, Scalar(Rat(1)));
  auto s = PoissonStructure::tensor({PoissonStructure::weyl(1), PoissonStructure::torus(torus2)});
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_poisson_axioms(s, 4, 20, 17));
}
BENCHMARK(BM_AxiomSweep);

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
