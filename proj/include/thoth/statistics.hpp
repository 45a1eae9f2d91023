#pragma once

#include <cstddef>
#include <vector>

#include "thoth/familiarity.hpp"
#include "thoth/syllables.hpp"
#include "thoth/text_ingest.hpp"

namespace thoth {

struct TextStatistics {
  std::size_t char_count = 0;    // non-whitespace code points
  std::size_t letter_count = 0;  // letters inside Word tokens
  std::size_t word_count = 0;    // Word + Number tokens
  std::size_t sentence_count = 0;
  std::size_t syllable_count = 0;
  std::size_t polysyllable_count = 0;  // words with >= 3 syllables
  std::size_t complex_word_count = 0;  // Gunning Fog complex words
  std::size_t difficult_word_count = 0;
  std::vector<int> per_word_syllables;  // aligned with doc.word_indices()

  friend bool operator==(const TextStatistics&, const TextStatistics&) = default;
};

/// Gunning Fog "complex" word: three or more syllables once a single -ing,
/// -ed or -es suffix is removed. Numbers, hyphenated compounds and proper
/// nouns (capitalized words not opening their sentence) never qualify.
bool is_complex_word(const TokenizedDocument& doc, std::size_t token_index,
                     const SyllableExceptions& exceptions = {});

TextStatistics compute_statistics(const TokenizedDocument& doc,
                                  const FamiliarityLexicon& lexicon,
                                  const SyllableExceptions& exceptions = {});

}  // namespace thoth
