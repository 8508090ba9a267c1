#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "pim/equation.hpp"
#include "pim/kuratowski.hpp"
#include "pim/monoid.hpp"
#include "pim/reduce.hpp"
#include "pim/word.hpp"

namespace {

using namespace pim;

std::string random_letters(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    s.push_back(rng() % 2 ? 'D' : 'B');
  }
  return s;
}

void BM_quasi_reduce(benchmark::State& state) {
  Word w(random_letters(static_cast<std::size_t>(state.range(0)), 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_reduce(w));
  }
}
BENCHMARK(BM_quasi_reduce)->Arg(64)->Arg(1024)->Arg(16384);

void BM_build_kuratowski_class(benchmark::State& state) {
  ParamEq p = ParamEq::family00(2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(p));
  }
}
BENCHMARK(BM_build_kuratowski_class);

void BM_oracle_kuratowski(benchmark::State& state) {
  std::vector<std::pair<Word, Word>> rels = {
      {Word::parse("DBDB"), Word::parse("DBDBDBDB")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(congruence_monoid(rels, 20));
  }
}
BENCHMARK(BM_oracle_kuratowski);

void BM_meet_fold(benchmark::State& state) {
  std::vector<ParamEq> params;
  for (int k = 1; k <= 4; ++k) {
    for (int ell = 1; ell <= 4; ++ell) {
      params.push_back(ParamEq::family00(k, ell));
    }
    for (Family f : {Family::f01, Family::f10, Family::f11}) {
      params.push_back(ParamEq::single(f, Parity::circ, k));
      params.push_back(ParamEq::single(f, Parity::bullet, k));
    }
  }
  for (auto _ : state) {
    ParamEq acc = params.front();
    for (std::size_t i = 1; i < params.size(); ++i) {
      acc = meet(acc, params[i]);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_meet_fold);

void BM_max_point_orbit(benchmark::State& state) {
  std::mt19937_64 rng(11);
  FiniteTopology t = random_topology(rng, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_point_orbit(t));
  }
}
BENCHMARK(BM_max_point_orbit);

}  // namespace

BENCHMARK_MAIN();
