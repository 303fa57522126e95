#include <benchmark/benchmark.h>

#include <random>

#include "latscope/band.hpp"
#include "latscope/crystal.hpp"
#include "latscope/holohedry.hpp"
#include "latscope/pattern.hpp"
#include "latscope/projection.hpp"
#include "latscope/qf.hpp"
#include "latscope/zmodule.hpp"

using namespace latscope;

namespace {

QF random_qf(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  auto q = [&] { return mpq_class(num(rng), den(rng)); };
  return QF(q(), q(), q(), q());
}

ZModule running_example() {
  return ZModule::from_generators(
      {{QF(5), QF(4)}, {QF(0), QF(7)}}, 2);
}

ZModule hex_column() {
  return ZModule::from_generators(
      {{QF(1), QF(0), QF(0)},
       {QF(mpq_class(1, 2)), QF::sqrt3() / QF(2), QF(0)},
       {QF(0), QF(0), QF(1)}},
      3);
}

void bm_qf_multiply(benchmark::State& state) {
  std::mt19937 rng(1);
  QF a = random_qf(rng), b = random_qf(rng);
  for (auto _ : state) {
    QF c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_qf_multiply);

void bm_qf_sign(benchmark::State& state) {
  // Near-cancelling combination that forces the interval refinement path.
  QF x = QF(3) - QF::sqrt2() - QF::sqrt3() -
         QF(mpq_class(1, 1000000)) * QF::sqrt6();
  for (auto _ : state) {
    int s = x.sign();
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_qf_sign);

void bm_zmodule_canonicalize(benchmark::State& state) {
  std::mt19937 rng(2);
  std::vector<Vec> gens;
  for (int i = 0; i < 6; ++i)
    gens.push_back({random_qf(rng), random_qf(rng), random_qf(rng)});
  for (auto _ : state) {
    ZModule m = ZModule::from_generators(gens, 3);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_zmodule_canonicalize);

void bm_zmodule_membership(benchmark::State& state) {
  ZModule l = hex_column();
  Vec v = {QF(mpq_class(7, 2)), QF(mpq_class(5, 2)) * QF::sqrt3(), QF(-4)};
  for (auto _ : state) {
    bool in = l.contains(v);
    benchmark::DoNotOptimize(in);
  }
}
BENCHMARK(bm_zmodule_membership);

void bm_band_period_check(benchmark::State& state) {
  ZModule l = running_example();
  QF y0(6);
  Vec p = {QF(5)};
  for (auto _ : state) {
    bool ok = band_period_check(l, y0, p);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(bm_band_period_check);

void bm_period_module(benchmark::State& state) {
  CrystalGroup g = CrystalGroup::make(
      ZModule::from_generators(
          {{QF(5), QF(0), QF(4)}, {QF(0), QF(1), QF(0)}, {QF(0), QF(0), QF(7)}},
          3),
      {{identity_mat(3), Vec(3, QF(0))}});
  QF y0(6);
  for (auto _ : state) {
    PeriodModule pm = period_module(g, y0);
    benchmark::DoNotOptimize(pm);
  }
}
BENCHMARK(bm_period_module);

void bm_holohedry_hex(benchmark::State& state) {
  ZModule hex = hex_column().project();
  for (auto _ : state) {
    auto h = holohedry(hex);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_holohedry_hex);

void bm_render_row(benchmark::State& state) {
  WaveSum f(2);
  f.add({{QF(1), QF(0)}, {1.0, 0.0}});
  f.add({{QF(0), QF(1)}, {0.5, 0.5}});
  f.add({{QF(2), QF(-1)}, {0.0, 1.0}});
  for (auto _ : state) {
    Image img = render(f, -2.0, 2.0, -2.0, 2.0, 256, 1);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(bm_render_row);

}  // namespace

BENCHMARK_MAIN();
