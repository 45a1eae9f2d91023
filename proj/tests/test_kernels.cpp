#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "support.hpp"
#include "thoth/kernels.hpp"

using namespace thoth;
using test_support::resources;

namespace {

std::vector<WordTraits> traits_of(const TokenizedDocument& doc) {
  std::vector<WordTraits> out;
  for (std::size_t i : doc.word_indices()) out.push_back(describe_word(doc, i, resources().dale_chall));
  return out;
}

void compare(const TokenizedDocument& doc) {
  const auto& r = resources();
  REQUIRE(kernels::serial::word_syllables(doc, r.syllables) ==
          kernels::omp::word_syllables(doc, r.syllables));
  REQUIRE(kernels::serial::unfamiliar_flags(doc, r.dale_chall) ==
          kernels::omp::unfamiliar_flags(doc, r.dale_chall));
  const auto traits = traits_of(doc);
  ReaderProfile p;
  p.unfamiliar_multiplier = 2.25;
  REQUIRE(kernels::serial::word_durations(traits, 123.456, p) ==
          kernels::omp::word_durations(traits, 123.456, p));
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference element-wise") {
  for (int threads : {1, 2, 3, 8}) {
    CAPTURE(threads);
    omp_set_num_threads(threads);
    CHECK(kernels::max_threads() == threads);
    for (const char* stem : test_support::kOracleFixtures) {
      compare(tokenize(test_support::read_file(test_support::fixture(std::string(stem) + ".txt"))));
    }
    std::mt19937_64 rng(static_cast<unsigned>(threads));
    std::string big;
    for (int i = 0; i < 40; ++i) big += test_support::random_prose(rng, 250) + "\n\n";
    compare(tokenize(big));
    compare(tokenize(""));
  }
}

TEST_CASE("kernels agree with the per-word functions") {
  const auto doc = tokenize("Reading about 42 hagiographies, quietly.");
  const auto syl = kernels::serial::word_syllables(doc, resources().syllables);
  CHECK(syl == std::vector<int>{2, 2, 2, 4, 2});
  const auto flags = kernels::serial::unfamiliar_flags(doc, resources().dale_chall);
  CHECK(flags == std::vector<std::uint8_t>{0, 0, 1, 1, 1});
}
