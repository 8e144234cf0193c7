#include <benchmark/benchmark.h>

#include "spinmoment/gordon.hpp"
#include "spinmoment/moments.hpp"
#include "spinmoment/quadrature.hpp"
#include "spinmoment/selffield.hpp"
#include "spinmoment/states.hpp"

using namespace spinmoment;

namespace {

SpinorState default_packet() {
  PhysicalScales s;
  return SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
}

void BM_gauss_hermite_rule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const quad::Rule1D& r = quad::gauss_hermite(n);
    benchmark::DoNotOptimize(r.nodes.data());
  }
}
BENCHMARK(BM_gauss_hermite_rule)->Arg(16)->Arg(64);

void BM_electric_constant_det(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::electric_constant({}).value);
  }
}
BENCHMARK(BM_electric_constant_det);

void BM_interaction_constant_det(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::interaction_constant({}).value);
  }
}
BENCHMARK(BM_interaction_constant_det);

void BM_interaction_constant_mc(benchmark::State& state) {
  quad::Options opt;
  opt.method = quad::Method::MonteCarlo;
  opt.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::interaction_constant(opt).value);
  }
}
BENCHMARK(BM_interaction_constant_mc)->Arg(100000)->Arg(1000000);

void BM_self_potential_closed(benchmark::State& state) {
  const SpinorState packet = default_packet();
  const AzimuthalField a1 = self_potential(packet);
  const Vec3 x{packet.scales().d, 0.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a1(x));
  }
}
BENCHMARK(BM_self_potential_closed);

void BM_self_potential_raw(benchmark::State& state) {
  const SpinorState packet = default_packet();
  const PhysicalScales& s = packet.scales();
  const VectorField3 jm = magnetization_current_profile(packet).as_field();
  RawPotentialOptions opt;
  opt.length_scale = s.d;
  const Vec3 x{s.d, 0.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vector_potential_from_current(jm, s.c, x, opt));
  }
}
BENCHMARK(BM_self_potential_raw);

void BM_moment_breakdown(benchmark::State& state) {
  const SpinorState packet = default_packet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_moment(packet, Convention::OracleResolved, {}));
  }
}
BENCHMARK(BM_moment_breakdown);

void BM_matching_width(benchmark::State& state) {
  PhysicalScales s;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_matching_width(Convention::PaperAsPublished, s, {}).d_star_compton);
  }
}
BENCHMARK(BM_matching_width);

}  // namespace

BENCHMARK_MAIN();
