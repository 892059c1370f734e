#include <benchmark/benchmark.h>

#include "avla/cohomology.hpp"
#include "avla/io.hpp"
#include "avla/linalg.hpp"

namespace {

avla::AlgebraFixture load(const char* name) {
  return avla::parse_algebra(avla::read_file(std::string(AVLA_FIXTURE_DIR) + "/" + name));
}

avla::AveragingOperator load_op(const char* name) {
  return avla::parse_operator(avla::read_file(std::string(AVLA_FIXTURE_DIR) + "/" + name));
}

// A dense matrix with small, mixed-sign rational entries and a known rank deficit.
avla::RatMatrix sample_matrix(std::size_t n) {
  avla::RatMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a(r, c) = avla::Rational(static_cast<std::int64_t>((r * 7 + c * 3) % 11) - 5, static_cast<std::int64_t>(1 + (r + c) % 4));
  for (std::size_t c = 0; c < n; ++c) a(n - 1, c) = a(0, c) + a(1, c);
  return a;
}

void BM_Rref(benchmark::State& state) {
  const avla::RatMatrix a = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(avla::rref(a));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

void BM_DeltaMatrix(benchmark::State& state) {
  const avla::Representation rep = avla::self_representation(load("ex2_2.json").algebra);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(avla::matrix_of(avla::CochainOperator::Delta, n, rep));
}
BENCHMARK(BM_DeltaMatrix)->DenseRange(1, 3);

void BM_ConeCohomology(benchmark::State& state) {
  avla::ComplexSpec spec;
  spec.kind = avla::ComplexKind::AL;
  spec.max_degree = 3;
  spec.op = load_op("good_theta.json");
  spec.rep = avla::self_representation(load("ex2_2.json").algebra, spec.op);
  for (auto _ : state) benchmark::DoNotOptimize(avla::cohomology_report(spec));
}
BENCHMARK(BM_ConeCohomology)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
