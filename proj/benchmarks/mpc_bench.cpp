#include <benchmark/benchmark.h>

#include <random>

#include "corpus.hpp"
#include "random_cases.hpp"

using namespace mpc;

namespace {

Field field_for(std::int64_t which) { return which == 0 ? corpus::z(11) : corpus::gf4(); }

void BM_Rref(benchmark::State& state) {
  const Field f = field_for(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  std::mt19937 rng(1);
  const Matrix m = cases::random_matrix(f, len, len, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{0, 1}, {8, 32, 64}});

void BM_Nullspace(benchmark::State& state) {
  const Field f = field_for(state.range(0));
  std::mt19937 rng(2);
  const Matrix m = cases::random_matrix(f, 24, 48, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_basis(m));
}
BENCHMARK(BM_Nullspace)->Arg(0)->Arg(1);

void BM_Encode(benchmark::State& state) {
  const auto fx = corpus::z11_hamming();
  const PartitionCode code = construct_mpc(fx.parent);
  const Tuple sigma = fx.source.compose(Vec{1, 2, 3, 4}, 57);
  for (auto _ : state) benchmark::DoNotOptimize(encode(code, sigma));
}
BENCHMARK(BM_Encode);

void BM_DecoderBuild(benchmark::State& state) {
  const auto fx = corpus::gf4_hamming(0);
  const PartitionCode code = corpus::build(fx);
  for (auto _ : state) benchmark::DoNotOptimize(Decoder(code, fx.source).table_size());
}
BENCHMARK(BM_DecoderBuild);

void BM_Decode(benchmark::State& state) {
  const auto fx = corpus::z11_hamming();
  const PartitionCode code = construct_mpc(fx.parent);
  const Decoder dec(code, fx.source);
  std::mt19937 rng(3);
  std::vector<std::vector<Vec>> words;
  for (int i = 0; i < 256; ++i) {
    Vec w(4);
    for (auto& x : w) x = static_cast<Elem>(rng() % 11);
    words.push_back(encode(code, fx.source.compose(w, rng() % fx.source.rep_count())));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(words[i++ % words.size()]));
}
BENCHMARK(BM_Decode);

void BM_ValidateParent(benchmark::State& state) {
  const auto fx = state.range(0) == 0 ? corpus::z11_hamming() : corpus::gf4_hamming(0);
  for (auto _ : state) benchmark::DoNotOptimize(validate_parent(fx.parent, fx.source).ok());
}
BENCHMARK(BM_ValidateParent)->Arg(0)->Arg(1);

void BM_VerifyStructural(benchmark::State& state) {
  const auto fx = corpus::z5_unit();
  const PartitionCode code(fx.printed_encoders);
  for (auto _ : state) benchmark::DoNotOptimize(verify_compression(code, fx.source).pass);
}
BENCHMARK(BM_VerifyStructural);

void BM_VerifyExhaustive(benchmark::State& state) {
  const auto fx = corpus::gf4_s2(2);
  const PartitionCode code(fx.printed_encoders);
  const VerifyOptions opts{2'000'000, static_cast<unsigned>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_compression(code, fx.source, VerifyMode::Exhaustive, opts).pass);
}
BENCHMARK(BM_VerifyExhaustive)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BruteMin(benchmark::State& state) {
  const Source src = hamming_source(corpus::z(2), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_min_M(src).min_total);
}
BENCHMARK(BM_BruteMin)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
