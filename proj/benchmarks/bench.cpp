#include <benchmark/benchmark.h>

#include "refinv/factorization.hpp"
#include "refinv/fixtures.hpp"

using namespace refinv;

namespace {

void BM_FieldMul(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(state.range(0));
  std::vector<Scalar> elems = f.elements();
  std::size_t i = 1;
  for (auto _ : state) {
    Scalar r =
        f.mul(elems[i % elems.size()], elems[(i * 7 + 3) % elems.size()]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_FieldMul)->Arg(9)->Arg(16)->Arg(27);

void BM_FieldInv(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(state.range(0));
  std::vector<Scalar> elems = f.elements();
  std::size_t i = 1;
  for (auto _ : state) {
    Scalar r = f.inv(elems[1 + i % (elems.size() - 1)]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_FieldInv)->Arg(9)->Arg(27);

void BM_MatMul(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(4);
  Matrix a = Matrix::identity(f, 3);
  a.at(0, 2) = f.from_coeffs({0, 1});
  a.at(1, 0) = f.one();
  Matrix b = transpose(a);
  for (auto _ : state) {
    Matrix r = mat_mul(f, a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MatMul);

void BM_GroupClosure(benchmark::State& state) {
  Fixture fx = fixture_gl(2, state.range(0));
  for (auto _ : state) {
    auto elems = enumerate_group(fx.spec);
    benchmark::DoNotOptimize(elems);
  }
}
BENCHMARK(BM_GroupClosure)->Arg(3)->Arg(5);

void BM_PolyMul(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(2);
  std::vector<MultiPoly> d = dickson_invariants(f, 3);
  for (auto _ : state) {
    MultiPoly r = poly_mul(f, d[1], d[2]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyMul);

void BM_Jacobian(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(3);
  std::vector<MultiPoly> d = dickson_invariants(f, 2);
  for (auto _ : state) {
    MultiPoly j = jacobian(f, d);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_Jacobian);

void BM_DicksonConstruct(benchmark::State& state) {
  FieldSpec f = FieldSpec::builtin(2);
  for (auto _ : state) {
    auto d = dickson_invariants(f, 3);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DicksonConstruct);

void BM_HyperplaneConstruction(benchmark::State& state) {
  Fixture fx = fixture_example41(4);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  Hyperplane h = *common_fixed_hyperplane(f, g);
  for (auto _ : state) {
    auto r = construct_hyperplane_invariants(f, g, h);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_HyperplaneConstruction);

void BM_JacobianFactorization(benchmark::State& state) {
  Fixture fx = fixture_gl(2, 3);
  const FieldSpec& f = fx.spec.field;
  std::vector<Matrix> g = enumerate_group(fx.spec);
  std::vector<MultiPoly> basics = dickson_invariants(f, 2);
  for (auto _ : state) {
    FactorizationReport rep = jacobian_factorization(f, g, basics);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_JacobianFactorization);

}  // namespace

BENCHMARK_MAIN();
