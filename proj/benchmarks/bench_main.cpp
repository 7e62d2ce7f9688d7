#include <benchmark/benchmark.h>

#include <sstream>

#include "qcb/bounds.hpp"
#include "qcb/cli.hpp"
#include "qcb/gaussian.hpp"
#include "qcb/telesim.hpp"

namespace {

void BM_RelativeEntropyTwoMode(benchmark::State& state) {
  const auto q = qcb::gaussian_choi_cm(qcb::ThermalLoss{0.5, 0.3}, 50.0);
  const auto sep = qcb::closest_separable_cm(q);
  const qcb::GaussianState s1{q.cm};
  const qcb::GaussianState s2{sep.cm};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcb::relative_entropy(s1, s2));
  }
}
BENCHMARK(BM_RelativeEntropyTwoMode);

void BM_FluxNumericLimit(benchmark::State& state) {
  const double mu = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcb::flux_numeric_limit(qcb::ThermalLoss{0.5, 0.0}, mu));
  }
}
BENCHMARK(BM_FluxNumericLimit)->Arg(100)->Arg(10000);

void BM_TwoWayCapacityDamping(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcb::two_way_capacity(qcb::AmplitudeDamping{0.37}));
  }
}
BENCHMARK(BM_TwoWayCapacityDamping);

void BM_TeleportQutritStretch(benchmark::State& state) {
  const auto ch = qcb::dv_kraus_channel(qcb::Depolarizing{3, 0.4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcb::stretch_check(ch).choi_distance);
  }
}
BENCHMARK(BM_TeleportQutritStretch);

void BM_SweepCapacityColumn(benchmark::State& state) {
  const std::vector<std::string> args = {
      "sweep", "lossy", "--axis", "eta", "--from", "0.01", "--to", "0.99",
      "--points", "200", "--series", "capacity,tgw"};
  for (auto _ : state) {
    std::ostringstream out, err;
    benchmark::DoNotOptimize(qcb::run_cli(args, out, err));
  }
}
BENCHMARK(BM_SweepCapacityColumn);

}  // namespace

BENCHMARK_MAIN();
