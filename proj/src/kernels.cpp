#include "thoth/kernels.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thoth::kernels {

namespace {

int syllables_of(const Token& t, const SyllableExceptions& exceptions) {
  return t.kind == TokenKind::Number ? count_number_syllables(t.text)
                                     : count_syllables(t.text, exceptions);
}

}  // namespace

namespace serial {

std::vector<int> word_syllables(const TokenizedDocument& doc,
                                const SyllableExceptions& exceptions) {
  const auto words = doc.word_indices();
  std::vector<int> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out[i] = syllables_of(doc.token(words[i]), exceptions);
  }
  return out;
}

std::vector<std::uint8_t> unfamiliar_flags(const TokenizedDocument& doc,
                                           const FamiliarityLexicon& lexicon) {
  const auto words = doc.word_indices();
  std::vector<std::uint8_t> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out[i] = is_unfamiliar_token(doc.token(words[i]), lexicon) ? 1 : 0;
  }
  return out;
}

std::vector<double> word_durations(std::span<const WordTraits> words, double base_ms,
                                   const ReaderProfile& profile,
                                   const ScheduleTuning& tuning) {
  std::vector<double> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out[i] = word_duration(words[i], base_ms, profile, tuning);
  }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<int> word_syllables(const TokenizedDocument& doc,
                                const SyllableExceptions& exceptions) {
  const auto words = doc.word_indices();
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<int> out(words.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = syllables_of(doc.token(words[i]), exceptions);
  }
  return out;
}

std::vector<std::uint8_t> unfamiliar_flags(const TokenizedDocument& doc,
                                           const FamiliarityLexicon& lexicon) {
  const auto words = doc.word_indices();
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<std::uint8_t> out(words.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = is_unfamiliar_token(doc.token(words[i]), lexicon) ? 1 : 0;
  }
  return out;
}

std::vector<double> word_durations(std::span<const WordTraits> words, double base_ms,
                                   const ReaderProfile& profile,
                                   const ScheduleTuning& tuning) {
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<double> out(words.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = word_duration(words[i], base_ms, profile, tuning);
  }
  return out;
}

}  // namespace omp

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace thoth::kernels
