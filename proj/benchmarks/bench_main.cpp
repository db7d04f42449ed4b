#include <benchmark/benchmark.h>

#include "tractlab/axiom_checks.hpp"
#include "tractlab/builtins.hpp"
#include "tractlab/closures.hpp"
#include "tractlab/perfection.hpp"

namespace {

using namespace tractlab;

void fusion_closure_sign(benchmark::State& state) {
  Pasture p = truncate3(builtins::sign_tract());
  for (auto _ : state) {
    Tract closed = fusion_closure(p, 6);
    benchmark::DoNotOptimize(closure_members(closed, 6).size());
  }
}
BENCHMARK(fusion_closure_sign);

void sigma_closure_sign_product(benchmark::State& state) {
  Tract ss = builtins::sign_product_tract();
  for (auto _ : state) {
    Tract closed = sigma_closure(ss, 6);
    benchmark::DoNotOptimize(closure_members(closed, 6).size());
  }
}
BENCHMARK(sigma_closure_sign_product);

void strong_fusion_scan(benchmark::State& state) {
  Tract ss = builtins::sign_product_tract();
  for (auto _ : state) {
    AxiomReport r = check_strong_fusion(ss, 5, int(state.range(0)));
    benchmark::DoNotOptimize(r.violations);
  }
}
BENCHMARK(strong_fusion_scan)->Arg(1)->Arg(4);

void certify_u23_sign(benchmark::State& state) {
  FMatroid fm = builtins::fixture("u23_sign");
  for (auto _ : state) {
    Certificate cert = certify_strong_perfection(fm, 2, "u23_sign");
    benchmark::DoNotOptimize(cert.pairs_checked);
  }
}
BENCHMARK(certify_u23_sign);

}  // namespace

BENCHMARK_MAIN();
