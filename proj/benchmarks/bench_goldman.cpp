#include <benchmark/benchmark.h>

#include "goldman/decide.hpp"
#include "goldman/intersect.hpp"
#include "goldman/words.hpp"
#include "goldman/zigzag.hpp"

using namespace goldman;

namespace {

const SurfaceRep& shared_rep() {
    static SurfaceRep rep = default_pants();
    return rep;
}

void BM_CyclicCanonical(benchmark::State& state) {
    std::string w = "aBabAbaBabABab";
    for (auto _ : state) {
        auto c = cyclic_canonical_str(w);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CyclicCanonical);

void BM_Holonomy(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    Word w = parse_word("aBabAbaBab");
    for (auto _ : state) {
        MobiusMap m = holonomy(rep, w);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_Holonomy);

void BM_TransversePoints(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    CyclicWord x = cyclic_canonical_str("aB");
    CyclicWord y = cyclic_canonical_str("aabab");
    int radius = static_cast<int>(state.range(0));
    // warm the ball cache so the benchmark measures the per-pair scan
    transverse_points(rep, x, y, radius);
    for (auto _ : state) {
        auto pts = transverse_points(rep, x, y, radius);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_TransversePoints)->Arg(6)->Arg(8)->Arg(10);

void BM_GoldmanBracket(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    CyclicWord x = cyclic_canonical_str("aabbaB");
    CyclicWord y = cyclic_canonical_str("abbabb");
    goldman_bracket(rep, x, y);
    for (auto _ : state) {
        BracketResult b = goldman_bracket(rep, x, y);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_GoldmanBracket);

void BM_BracketPowerSelf(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    CyclicWord x = cyclic_canonical_str("aB");
    bracket_power_self(rep, x, 2);
    for (auto _ : state) {
        FormalSum s = bracket_power_self(rep, x, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_BracketPowerSelf)->Arg(2)->Arg(5);

void BM_BuildZigzag(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    CyclicWord x = cyclic_canonical_str("aB");
    CyclicWord y = cyclic_canonical_str("aab");
    auto pts = transverse_points(rep, x, y);
    for (auto _ : state) {
        ZigzagCurve z = build_zigzag(rep, x, y, pts.front(), 3);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_BuildZigzag);

void BM_CenterProbe(benchmark::State& state) {
    const SurfaceRep& rep = shared_rep();
    Combo combo{{Rational(1), cyclic_canonical_str("aab")},
                {Rational(-2), cyclic_canonical_str("abb")}};
    center_probe(rep, combo);
    for (auto _ : state) {
        CenterVerdict v = center_probe(rep, combo);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CenterProbe);

}  // namespace

BENCHMARK_MAIN();
