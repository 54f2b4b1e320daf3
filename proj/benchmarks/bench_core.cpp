#include <benchmark/benchmark.h>

#include <random>

#include "fg/element_key.hpp"
#include "fg/metric.hpp"
#include "fg/sampling.hpp"
#include "fg/seqcomb.hpp"
#include "fg/tree_group.hpp"

namespace {

using namespace fg;

std::vector<NormalWord> sample_words(int count, int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NormalWord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_word(rng, len));
  return out;
}

void BM_Normalize(benchmark::State& state) {
  auto words = sample_words(64, static_cast<int>(state.range(0)), 1);
  std::vector<std::string> raw;
  for (const auto& w : words) raw.push_back(w.raw_letters());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(raw[i++ % raw.size()]));
  }
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32);

void BM_Multiply(benchmark::State& state) {
  auto words = sample_words(64, static_cast<int>(state.range(0)), 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = words[i % words.size()];
    const auto& v = words[(i + 17) % words.size()];
    benchmark::DoNotOptimize(multiply(u, v));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(32);

void BM_Decompose(benchmark::State& state) {
  auto words = sample_words(64, static_cast<int>(state.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(32);

void BM_CanonicalKey(benchmark::State& state) {
  auto words = sample_words(64, static_cast<int>(state.range(0)), 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_CanonicalKey)->Arg(4)->Arg(8);

void BM_ActionSignature(benchmark::State& state) {
  auto words = sample_words(16, 6, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(action_signature(words[i++ % words.size()],
                                              static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ActionSignature)->Arg(6)->Arg(8);

void BM_EnumerateBall(benchmark::State& state) {
  for (auto _ : state) {
    BallTable t = enumerate_ball(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.entries.size());
  }
}
BENCHMARK(BM_EnumerateBall)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PivotPattern(benchmark::State& state) {
  std::mt19937_64 rng(6);
  std::vector<IndexSeq> seqs;
  for (int i = 0; i < 64; ++i) {
    seqs.push_back(index_seq(random_pivot_pattern_word(rng, static_cast<int>(state.range(0)))));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_pivot_pattern(seqs[i++ % seqs.size()]));
  }
}
BENCHMARK(BM_PivotPattern)->Arg(16)->Arg(64);

void BM_TripleInject(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<NormalWord> gp;
  for (int i = 0; i < 16; ++i) gp.push_back(random_commutator_word(rng, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = gp[i % gp.size()];
    const auto& y = gp[(i + 5) % gp.size()];
    const auto& z = gp[(i + 11) % gp.size()];
    benchmark::DoNotOptimize(triple_inject(x, y, z));
    ++i;
  }
}
BENCHMARK(BM_TripleInject);

}  // namespace

BENCHMARK_MAIN();
