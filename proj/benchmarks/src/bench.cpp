#include <benchmark/benchmark.h>

#include <random>

#include "trilocal/euclidean.hpp"
#include "trilocal/expr_parser.hpp"
#include "trilocal/matrix_localization.hpp"
#include "trilocal/module_localization.hpp"
#include "trilocal/module_spec.hpp"

using namespace trilocal;

namespace {

const char* const kFamilies[] = {
    R"({"kind":"regular"})",
    R"({"kind":"double"})",
    R"({"kind":"scaled","k":2})",
    R"({"kind":"tensor-free","A_gens":["s","t"],"B_gens":["u"]})",
    R"({"kind":"hnn-free","A_gens":["s","t"]})",
};

void BM_NormalizeRandom(benchmark::State& state) {
  auto f = make_family(kFamilies[state.range(0)]);
  Rng rng(1);
  std::vector<Expr> exprs;
  for (int i = 0; i < 64; ++i) exprs.push_back(random_expr(*f, rng, 4, 4));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(t_normalize(exprs[i++ % exprs.size()], f));
  state.SetLabel(f->name());
}
BENCHMARK(BM_NormalizeRandom)->DenseRange(0, 4);

void BM_NormalizePower(benchmark::State& state) {
  auto f = make_family(kFamilies[4]);
  const std::string text = "(x[h(s,t)] + x[h(1,s)] + 2)^" + std::to_string(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parse_and_normalize(text, f));
}
BENCHMARK(BM_NormalizePower)->Arg(2)->Arg(4)->Arg(6);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-100, 100);
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(6)->Arg(10);

void BM_RhoMatrixProduct(benchmark::State& state) {
  auto f = make_family(kFamilies[state.range(0)]);
  Rng rng(3);
  const auto x = tri_random(*f, rng), y = tri_random(*f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rho_matrix(f, x) * rho_matrix(f, y));
  state.SetLabel(f->name());
}
BENCHMARK(BM_RhoMatrixProduct)->DenseRange(0, 4);

void BM_LocalizeRandomModule(benchmark::State& state) {
  const char* const families[] = {R"({"kind":"regular"})", R"({"kind":"scaled","k":2})", R"({"kind":"double"})"};
  auto f = make_family(families[state.range(0)]);
  Rng rng(11);
  const auto n = random_triple_module(f, rng, 4, 10);
  for (auto _ : state) benchmark::DoNotOptimize(localize_module(n, 10));
  state.SetLabel(f->name());
}
BENCHMARK(BM_LocalizeRandomModule)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
