// Serial reference kernels against their OpenMP counterparts on group sums
// that dominate pairing construction and fixed-space projection.

#include "brauer/kernels.hpp"
#include "brauer/named_groups.hpp"
#include "brauer/representation.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

namespace {

using namespace brauer;

struct Fixture {
  NamedGroup ng;
  Representation rep;
  std::vector<Elem> all;
  QMatrix seed;
};

// gl2:p acting on the cosets of U1; state.range(0) selects p.
const Fixture& fixture(unsigned p) {
  static std::map<unsigned, Fixture> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    auto ng = named_group(GroupSpec::parse("gl2:" + std::to_string(p)));
    auto rep = perm_rep(ng.subgroup("U1")).rep;
    std::vector<Elem> all(ng.group.order());
    std::iota(all.begin(), all.end(), Elem{0});
    QMatrix seed = QMatrix::identity(rep.dim());
    for (std::size_t i = 0; i + 1 < rep.dim(); ++i) seed(i, i + 1) = seed(i + 1, i) = Rational(1, 3);
    it = cache.emplace(p, Fixture{std::move(ng), rep, std::move(all), std::move(seed)}).first;
  }
  return it->second;
}

void BM_CongruenceSerial(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::congruence_sum(f.rep.images(), f.all, f.seed));
}

void BM_CongruenceParallel(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::parallel::congruence_sum(f.rep.images(), f.all, f.seed));
}

void BM_ImageSumSerial(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::image_sum(f.rep.images(), f.all));
}

void BM_ImageSumParallel(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::parallel::image_sum(f.rep.images(), f.all));
}

void BM_HomomorphismSerial(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::serial::homomorphism_holds(f.ng.group, f.rep.images(), f.ng.group.generators(), f.all));
}

void BM_HomomorphismParallel(benchmark::State& state) {
  const auto& f = fixture(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::parallel::homomorphism_holds(
        f.ng.group, f.rep.images(), f.ng.group.generators(), f.all));
}

}  // namespace

BENCHMARK(BM_CongruenceSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CongruenceParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImageSumSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImageSumParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomomorphismSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomomorphismParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
