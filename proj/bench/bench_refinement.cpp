#include <benchmark/benchmark.h>

#include <map>

#include "dtk/equivalences.hpp"
#include "dtk/random.hpp"

using namespace dtk;

namespace {

// Out-degree 3, a third of the transitions silent.
const Lts& instance(std::size_t n) {
  static std::map<std::size_t, Lts> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rng rng(n);
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
  std::uniform_int_distribution<int> action(0, 5);
  const char* names[] = {"tau", "tau", "a", "b", "c", "d"};
  std::vector<std::string> states;
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  for (std::size_t s = 0; s < n; ++s) {
    states.push_back("s" + std::to_string(s));
    for (int j = 0; j < 3; ++j) trans.emplace_back(static_cast<StateId>(s), names[action(rng)], state(rng));
  }
  return cache.emplace(n, Lts(std::move(states), trans)).first->second;
}

void run(benchmark::State& st, Kernel kernel, EquivVariant v) {
  const auto& l = instance(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto p = coarsest_partition_lts(l, v, kernel);
    benchmark::DoNotOptimize(p);
  }
  st.counters["states"] = static_cast<double>(l.size());
}

void Serial(benchmark::State& st) { run(st, Kernel::Serial, EquivVariant::DivergenceSensitive); }
void Parallel(benchmark::State& st) { run(st, Kernel::Parallel, EquivVariant::DivergenceSensitive); }
void SerialBlind(benchmark::State& st) { run(st, Kernel::Serial, EquivVariant::DivergenceBlind); }
void ParallelBlind(benchmark::State& st) { run(st, Kernel::Parallel, EquivVariant::DivergenceBlind); }

}  // namespace

BENCHMARK(Serial)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK(Parallel)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK(SerialBlind)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(ParallelBlind)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
