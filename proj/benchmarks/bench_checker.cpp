#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "ratmc/automata.hpp"
#include "ratmc/checker.hpp"
#include "ratmc/model.hpp"
#include "ratmc/parser.hpp"
#include "ratmc/regex.hpp"

namespace {

using namespace ratmc;

const RationalKripkeModel& worked() {
  static const RationalKripkeModel m = load_model(std::string(RATMC_FIXTURE_DIR) + "/worked.rkm");
  return m;
}

Formula diamond_chain(int depth) {
  Formula f = Formula::atom("x");
  for (int i = 0; i < depth; ++i) f = Formula::diamond(RelRef{"R", false}, f);
  return f;
}

void BM_DiamondChain(benchmark::State& state) {
  const Formula f = diamond_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Checker checker(worked());
    benchmark::DoNotOptimize(checker.global_check(f));
  }
}
BENCHMARK(BM_DiamondChain)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BoxChain(benchmark::State& state) {
  Formula f = Formula::atom("x");
  for (int i = 0; i < state.range(0); ++i) f = Formula::box(RelRef{"R", false}, f);
  for (auto _ : state) {
    Checker checker(worked());
    benchmark::DoNotOptimize(checker.global_check(f));
  }
}
BENCHMARK(BM_BoxChain)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

Nfa random_nfa(std::mt19937& rng, std::size_t states) {
  const Alphabet sigma("01");
  Nfa a(sigma);
  for (std::size_t i = 1; i < states; ++i) a.add_state();
  std::uniform_int_distribution<std::size_t> pick(0, states - 1);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t s = 0; s < states; ++s) {
    a.set_accepting(static_cast<Nfa::State>(s), coin(rng));
    for (char c : sigma) {
      for (int k = 0; k < 2; ++k) {
        a.add_transition(static_cast<Nfa::State>(s), c, static_cast<Nfa::State>(pick(rng)));
      }
    }
  }
  return a;
}

void BM_Complement(benchmark::State& state) {
  std::mt19937 rng(7);
  const Nfa a = random_nfa(rng, static_cast<std::size_t>(state.range(0)));
  const Nfa universe = Nfa::universal(a.alphabet());
  for (auto _ : state) benchmark::DoNotOptimize(complement(a, universe));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Complement)->RangeMultiplier(2)->Range(4, 16);

void BM_RegexEquivalence(benchmark::State& state) {
  const Alphabet sigma("01");
  const auto e1 = parse_regex("!(0;!(!0+1));(1+0)", sigma);
  const auto e2 = parse_regex("(!(0;!(!0+1));1)+(!(0;!(!0+1));0)", sigma);
  for (auto _ : state) benchmark::DoNotOptimize(regex_equiv(e1, e2, sigma));
}
BENCHMARK(BM_RegexEquivalence)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
