// Serial reference kernels against their OpenMP versions on a synthetic
// corpus built from the fixture texts.

#include <benchmark/benchmark.h>

#include <fstream>
#include <map>
#include <sstream>

#include "thoth/kernels.hpp"
#include "thoth/resources.hpp"

namespace {

using namespace thoth;

std::string corpus(int copies) {
  std::string base;
  for (const char* name : {"sample_01.txt", "sample_02.txt", "sample_03.txt"}) {
    std::ifstream in(std::string(THOTH_FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    base += ss.str();
    base += "\n\n";
  }
  std::string out;
  for (int i = 0; i < copies; ++i) out += base;
  return out;
}

const TokenizedDocument& doc_of(int copies) {
  static std::map<int, TokenizedDocument> cache;
  auto it = cache.find(copies);
  if (it == cache.end()) it = cache.emplace(copies, tokenize(corpus(copies))).first;
  return it->second;
}

std::vector<WordTraits> traits_of(const TokenizedDocument& doc) {
  const auto& lex = Resources::shared().dale_chall;
  std::vector<WordTraits> out;
  for (std::size_t i : doc.word_indices()) out.push_back(describe_word(doc, i, lex));
  return out;
}

template <auto Kernel>
void BM_syllables(benchmark::State& state) {
  const auto& doc = doc_of(static_cast<int>(state.range(0)));
  const auto& exc = Resources::shared().syllables;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(doc, exc));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(doc.word_count()));
}

template <auto Kernel>
void BM_unfamiliar(benchmark::State& state) {
  const auto& doc = doc_of(static_cast<int>(state.range(0)));
  const auto& lex = Resources::shared().dale_chall;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(doc, lex));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(doc.word_count()));
}

template <auto Kernel>
void BM_durations(benchmark::State& state) {
  const auto traits = traits_of(doc_of(static_cast<int>(state.range(0))));
  const ReaderProfile profile;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(traits, 200.0, profile, kDefaultTuning));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(traits.size()));
}

}  // namespace

BENCHMARK(BM_syllables<kernels::serial::word_syllables>)->Name("syllables/serial")->Arg(10)->Arg(200);
BENCHMARK(BM_syllables<kernels::omp::word_syllables>)->Name("syllables/omp")->Arg(10)->Arg(200);
BENCHMARK(BM_unfamiliar<kernels::serial::unfamiliar_flags>)->Name("unfamiliar/serial")->Arg(10)->Arg(200);
BENCHMARK(BM_unfamiliar<kernels::omp::unfamiliar_flags>)->Name("unfamiliar/omp")->Arg(10)->Arg(200);
BENCHMARK(BM_durations<kernels::serial::word_durations>)->Name("durations/serial")->Arg(10)->Arg(200);
BENCHMARK(BM_durations<kernels::omp::word_durations>)->Name("durations/omp")->Arg(10)->Arg(200);

BENCHMARK_MAIN();
