#include <benchmark/benchmark.h>

#include <random>

#include "mnet/screen.hpp"

namespace {

// Layered random network: metabolites m0..m{n-1}, early indices form the
// initial solution, each rule consumes one or two earlier metabolites so the
// whole universe stays derivable-ish.
mnet::LtsGraph synthetic_graph(int metabolites, int rules, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<mnet::Metabolite> names;
    names.reserve(metabolites);
    for (int i = 0; i < metabolites; ++i) names.push_back("m" + std::to_string(i));

    const int seeds = std::max(2, metabolites / 10);
    mnet::InitialSolution solution;
    for (int i = 0; i < seeds; ++i) solution.metabolites.insert(names[i]);

    std::vector<mnet::Rule> rs;
    rs.reserve(rules);
    for (int i = 0; i < rules; ++i) {
        std::uniform_int_distribution<int> concl_dist(seeds, metabolites - 1);
        int conclusion = concl_dist(rng);
        std::uniform_int_distribution<int> prem_dist(0, std::max(1, conclusion - 1));
        mnet::Rule r;
        r.id = "r" + std::to_string(i + 1);
        r.premises.push_back(names[prem_dist(rng)]);
        if (rng() % 2) r.premises.push_back(names[prem_dist(rng)]);
        r.conclusion = names[conclusion];
        rs.push_back(std::move(r));
    }
    auto network = mnet::validate_network(std::move(rs), "synthetic");
    return mnet::build_graph(mnet::encode(network, solution));
}

int pick_target(const mnet::LtsGraph& g) {
    // deepest derivable non-initial metabolite
    mnet::Bitset closure = g.net.closure(g.net.initial);
    int target = -1;
    closure.for_each([&](int m) {
        if (!g.net.initial.test(m)) target = m;
    });
    return target;
}

void BM_ScreenSerial(benchmark::State& state) {
    auto g = synthetic_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                             20240517);
    int target = pick_target(g);
    for (auto _ : state) benchmark::DoNotOptimize(mnet::run_screen_serial(g, target));
}

void BM_ScreenParallel(benchmark::State& state) {
    auto g = synthetic_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                             20240517);
    int target = pick_target(g);
    for (auto _ : state) benchmark::DoNotOptimize(mnet::run_screen_parallel(g, target));
}

void BM_Closure(benchmark::State& state) {
    auto g = synthetic_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                             20240517);
    for (auto _ : state) benchmark::DoNotOptimize(g.net.closure(g.net.initial));
}

}  // namespace

BENCHMARK(BM_Closure)->Args({100, 300})->Args({400, 1500})->Args({1000, 4000});
BENCHMARK(BM_ScreenSerial)->Args({100, 300})->Args({400, 1500})->Args({1000, 4000})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScreenParallel)->Args({100, 300})->Args({400, 1500})->Args({1000, 4000})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
