#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thoth/familiarity.hpp"
#include "thoth/gradient.hpp"
#include "thoth/readability.hpp"
#include "thoth/text_ingest.hpp"

namespace thoth {

inline constexpr double kMinWpm = 60.0;
inline constexpr double kMaxWpm = 1500.0;
inline constexpr double kMinUnfamiliarMultiplier = 1.0;
inline constexpr double kMaxUnfamiliarMultiplier = 4.0;

struct ReaderProfile {
  double base_wpm = 300.0;
  std::optional<double> reader_age;
  double unfamiliar_multiplier = 1.5;
  LexiconName lexicon = LexiconName::DaleChall;
  bool length_modifier_enabled = true;
  bool punctuation_pauses_enabled = true;

  /// Throws Error(Validation) naming the offending field.
  void validate() const;
};

/// Timing constants that are not part of the reader profile.
struct ScheduleTuning {
  std::size_t long_word_threshold = 8;  // characters
  double long_word_step = 0.1;          // per character over the threshold
  double long_word_cap = 2.0;
  double sentence_pause = 2.0;
  double clause_pause = 1.5;
  double min_age_factor = 0.5;
  double max_age_factor = 2.0;
};

inline constexpr ScheduleTuning kDefaultTuning{};

enum class Pause : unsigned char { None, Clause, SentenceEnd };

/// What word_duration needs to know about one word.
struct WordTraits {
  std::size_t length = 0;  // characters
  bool unfamiliar = false;
  Pause pause = Pause::None;
};

struct ScheduleEntry {
  std::size_t token_index = 0;
  std::string text;
  double duration_ms = 0.0;
  std::size_t orp_index = 0;
  bool unfamiliar = false;
  std::optional<Rgb> color;
};

struct DisplaySchedule {
  std::vector<ScheduleEntry> entries;
  ReaderProfile profile;
  double effective_wpm = 0.0;
  double total_ms = 0.0;
};

/// 60000 / wpm. Throws Error(Argument) for wpm <= 0.
double base_duration_ms(double effective_wpm);

/// 1 without a reader age, else reader_age / text_age clamped to [0.5, 2].
double age_factor(const ReaderProfile& profile, double estimated_text_age,
                  const ScheduleTuning& tuning = kDefaultTuning);

/// The pause a word inherits from the punctuation right after it (closing
/// quotes and brackets are skipped): a sentence-final mark or one of , ; :
Pause trailing_pause(const TokenizedDocument& doc, std::size_t token_index);

WordTraits describe_word(const TokenizedDocument& doc, std::size_t token_index,
                         const FamiliarityLexicon& lexicon);

/// base_ms scaled by the length, pause and familiarity factors. The
/// familiarity factor is applied last so that an unfamiliar word's duration
/// is exactly multiplier x its familiar-case duration.
double word_duration(const WordTraits& word, double base_ms, const ReaderProfile& profile,
                     const ScheduleTuning& tuning = kDefaultTuning);

/// Optimal recognition point: 0 for 1 char, 1 for 2-5, 2 for 6-9, 3 for
/// 10-13, 4 beyond. Throws Error(Argument) for 0.
std::size_t orp_index(std::size_t length);
std::size_t orp_index(std::string_view word);

/// One entry per Word/Number token. Colors come from the gradient over the
/// document's wrapped lines unless `gradient` is nullopt.
DisplaySchedule build_schedule(const TokenizedDocument& doc, const ReadabilityReport& report,
                               const ReaderProfile& profile, const FamiliarityLexicon& lexicon,
                               const std::optional<GradientConfig>& gradient = GradientConfig{},
                               const ScheduleTuning& tuning = kDefaultTuning);

}  // namespace thoth
