#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "thoth/familiarity.hpp"
#include "thoth/gradient.hpp"
#include "thoth/readability.hpp"
#include "thoth/scheduler.hpp"
#include "thoth/statistics.hpp"
#include "thoth/syllables.hpp"
#include "thoth/text_ingest.hpp"

namespace thoth {

/// The shipped data files: syllable exceptions and the three word lists.
struct Resources {
  SyllableExceptions syllables;
  FamiliarityLexicon dale_chall;
  FamiliarityLexicon spache;
  FamiliarityLexicon top1000;

  /// Loads syllables.txt, dale_chall.txt, spache.txt and top1000.txt from
  /// `dir`. Throws Error(Load).
  static Resources load(const std::filesystem::path& dir);

  /// $THOTH_LEXICON_DIR, else the data directory the build was configured
  /// with.
  static std::filesystem::path default_dir();

  /// Process-wide instance loaded from default_dir() on first use.
  static const Resources& shared();

  const FamiliarityLexicon& lexicon(LexiconName name) const;
};

struct Analysis {
  TokenizedDocument doc;
  TextStatistics stats;
  double spache_unfamiliar_fraction = 0.0;
  ReadabilityReport report;
};

/// Tokenize, count and score. Dale-Chall difficulty uses `lexicon`; Spache
/// always uses its own list. Throws EncodingError or insufficient-text.
Analysis analyze(std::string_view text, const Resources& resources,
                 LexiconName lexicon = LexiconName::DaleChall);

/// Analysis under profile.lexicon followed by build_schedule.
DisplaySchedule schedule_text(std::string_view text, const ReaderProfile& profile,
                              const Resources& resources,
                              const std::optional<GradientConfig>& gradient = GradientConfig{});

}  // namespace thoth
