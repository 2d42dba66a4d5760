#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "gazekit/divergence.hpp"
#include "gazekit/ingest.hpp"
#include "gazekit/pca.hpp"
#include "gazekit/preprocess.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/stats.hpp"
#include "gazekit/svm.hpp"
#include "gazekit/synth.hpp"

using namespace gazekit;

namespace {

Eigen::MatrixXd random_blobs(int n, int d, Eigen::VectorXi& y, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x(n, d);
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    const bool pos = i % 5 == 0;
    for (int j = 0; j < d; ++j)
      x(i, j) = rng.gaussian(pos ? 1.5 : -1.5, 1.0);
    y[i] = pos ? 1 : -1;
  }
  return x;
}

void BM_RbfKernel(benchmark::State& state) {
  Rng rng(1);
  Eigen::VectorXd a(4), b(4);
  for (int i = 0; i < 4; ++i) {
    a[i] = rng.unit();
    b[i] = rng.unit();
  }
  for (auto _ : state) benchmark::DoNotOptimize(rbf_kernel(a, b, 0.5));
}
BENCHMARK(BM_RbfKernel);

void BM_SvmTrain(benchmark::State& state) {
  Eigen::VectorXi y;
  const auto x = random_blobs(static_cast<int>(state.range(0)), 4, y, 7);
  SvmParams params;
  params.C = 10.0;
  params.gamma = 0.5;
  for (auto _ : state) {
    const auto model = svm_train(x, y, params);
    benchmark::DoNotOptimize(model.bias);
  }
}
BENCHMARK(BM_SvmTrain)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_PcaFit(benchmark::State& state) {
  Eigen::VectorXi y;
  const auto x = random_blobs(static_cast<int>(state.range(0)), 25, y, 11);
  for (auto _ : state) {
    const auto model = pca_fit(x);
    benchmark::DoNotOptimize(model.eigenvalues.sum());
  }
}
BENCHMARK(BM_PcaFit)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);

void BM_DagostinoK2(benchmark::State& state) {
  Rng rng(3);
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (auto& x : v) x = rng.gaussian(0.0, 1.0);
  for (auto _ : state) {
    const auto report = dagostino_k2(v);
    benchmark::DoNotOptimize(report.k2);
  }
}
BENCHMARK(BM_DagostinoK2)->Arg(1000)->Arg(10000);

void BM_GenerateSession(benchmark::State& state) {
  SynthConfig cfg;
  cfg.duration_s = static_cast<double>(state.range(0));
  cfg.seed = 5;
  for (auto _ : state) {
    const auto result = generate_session(cfg);
    benchmark::DoNotOptimize(result.session.samples.size());
  }
}
BENCHMARK(BM_GenerateSession)->Arg(10)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_DivergenceStats(benchmark::State& state) {
  SynthConfig cfg;
  cfg.duration_s = 36.0;
  cfg.seed = 6;
  const auto session = generate_session(cfg).session;
  const auto series = divergence_series(session);
  for (auto _ : state) {
    const auto stats = divergence_stats(series, 3.0);
    benchmark::DoNotOptimize(stats.mean);
  }
}
BENCHMARK(BM_DivergenceStats);

}  // namespace

BENCHMARK_MAIN();
