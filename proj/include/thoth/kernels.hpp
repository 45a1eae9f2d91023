#pragma once

// Per-word inner loops of the pipeline. Each kernel has a serial reference
// and an OpenMP version with identical, element-wise results; the library
// calls the OpenMP versions. Without OpenMP the parallel versions degrade to
// the same serial loops.

#include <cstdint>
#include <span>
#include <vector>

#include "thoth/familiarity.hpp"
#include "thoth/scheduler.hpp"
#include "thoth/syllables.hpp"
#include "thoth/text_ingest.hpp"

namespace thoth::kernels {

namespace serial {
std::vector<int> word_syllables(const TokenizedDocument& doc,
                                const SyllableExceptions& exceptions);
std::vector<std::uint8_t> unfamiliar_flags(const TokenizedDocument& doc,
                                           const FamiliarityLexicon& lexicon);
std::vector<double> word_durations(std::span<const WordTraits> words, double base_ms,
                                   const ReaderProfile& profile,
                                   const ScheduleTuning& tuning = kDefaultTuning);
}  // namespace serial

namespace omp {
std::vector<int> word_syllables(const TokenizedDocument& doc,
                                const SyllableExceptions& exceptions);
std::vector<std::uint8_t> unfamiliar_flags(const TokenizedDocument& doc,
                                           const FamiliarityLexicon& lexicon);
std::vector<double> word_durations(std::span<const WordTraits> words, double base_ms,
                                   const ReaderProfile& profile,
                                   const ScheduleTuning& tuning = kDefaultTuning);
}  // namespace omp

/// Number of OpenMP threads the parallel kernels use (1 without OpenMP).
int max_threads();

}  // namespace thoth::kernels
