#include "thoth/scheduler.hpp"

#include <algorithm>
#include <cmath>

#include "thoth/chars.hpp"
#include "thoth/error.hpp"
#include "thoth/kernels.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

Error invalid(const std::string& field, const std::string& rule) {
  return Error(ErrorCode::Validation, "profile." + field + " " + rule);
}

}  // namespace

void ReaderProfile::validate() const {
  if (!std::isfinite(base_wpm) || base_wpm < kMinWpm || base_wpm > kMaxWpm) {
    throw invalid("base_wpm", "must be in [60, 1500]");
  }
  if (!std::isfinite(unfamiliar_multiplier) || unfamiliar_multiplier < kMinUnfamiliarMultiplier ||
      unfamiliar_multiplier > kMaxUnfamiliarMultiplier) {
    throw invalid("unfamiliar_multiplier", "must be in [1, 4]");
  }
  if (reader_age && (!std::isfinite(*reader_age) || *reader_age <= 0.0)) {
    throw invalid("reader_age", "must be positive");
  }
}

double base_duration_ms(double effective_wpm) {
  if (!(effective_wpm > 0.0) || !std::isfinite(effective_wpm)) {
    throw Error(ErrorCode::Argument, "words per minute must be positive");
  }
  return 60000.0 / effective_wpm;
}

double age_factor(const ReaderProfile& profile, double estimated_text_age,
                  const ScheduleTuning& tuning) {
  if (!profile.reader_age) return 1.0;
  return std::clamp(*profile.reader_age / estimated_text_age, tuning.min_age_factor,
                    tuning.max_age_factor);
}

Pause trailing_pause(const TokenizedDocument& doc, std::size_t token_index) {
  const auto tokens = doc.tokens();
  std::size_t j = token_index + 1;
  auto punct = [&](std::size_t k) { return tokens[k].kind == TokenKind::Punctuation; };
  while (j < tokens.size() && punct(j) &&
         chars::is_closing_mark(utf8::decode(tokens[j].text, 0).cp)) {
    ++j;
  }
  if (j >= tokens.size() || !punct(j)) return Pause::None;
  // In a cluster such as "?!" or "..." only the last mark is final.
  auto terminator = [&](std::size_t k) {
    const auto& t = tokens[k].text;
    return punct(k) && (t == "." || t == "!" || t == "?");
  };
  while (terminator(j) && !tokens[j].sentence_final && j + 1 < tokens.size() && terminator(j + 1)) {
    ++j;
  }
  if (tokens[j].sentence_final) return Pause::SentenceEnd;
  const auto& t = tokens[j].text;
  if (t == "," || t == ";" || t == ":") return Pause::Clause;
  return Pause::None;
}

WordTraits describe_word(const TokenizedDocument& doc, std::size_t token_index,
                         const FamiliarityLexicon& lexicon) {
  const Token& t = doc.token(token_index);
  return WordTraits{utf8::length(t.text), is_unfamiliar_token(t, lexicon),
                    trailing_pause(doc, token_index)};
}

double word_duration(const WordTraits& word, double base_ms, const ReaderProfile& profile,
                     const ScheduleTuning& tuning) {
  double d = base_ms;
  if (profile.length_modifier_enabled && word.length > tuning.long_word_threshold) {
    const double over = static_cast<double>(word.length - tuning.long_word_threshold);
    d *= std::min(1.0 + tuning.long_word_step * over, tuning.long_word_cap);
  }
  if (profile.punctuation_pauses_enabled) {
    if (word.pause == Pause::SentenceEnd) d *= tuning.sentence_pause;
    if (word.pause == Pause::Clause) d *= tuning.clause_pause;
  }
  if (word.unfamiliar) d *= profile.unfamiliar_multiplier;
  return d;
}

std::size_t orp_index(std::size_t length) {
  if (length == 0) throw Error(ErrorCode::Argument, "orp_index: empty word");
  if (length == 1) return 0;
  if (length <= 5) return 1;
  if (length <= 9) return 2;
  if (length <= 13) return 3;
  return 4;
}

std::size_t orp_index(std::string_view word) { return orp_index(utf8::length(word)); }

DisplaySchedule build_schedule(const TokenizedDocument& doc, const ReadabilityReport& report,
                               const ReaderProfile& profile, const FamiliarityLexicon& lexicon,
                               const std::optional<GradientConfig>& gradient,
                               const ScheduleTuning& tuning) {
  profile.validate();
  if (doc.word_count() == 0) throw insufficient_text("nothing to schedule");

  DisplaySchedule schedule;
  schedule.profile = profile;
  schedule.effective_wpm = profile.base_wpm * age_factor(profile, report.estimated_age, tuning);
  const double base_ms = base_duration_ms(schedule.effective_wpm);

  const auto words = doc.word_indices();
  const auto flags = kernels::omp::unfamiliar_flags(doc, lexicon);
  std::vector<WordTraits> traits(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    traits[i] = WordTraits{utf8::length(doc.token(words[i]).text), flags[i] != 0,
                           trailing_pause(doc, words[i])};
  }
  const auto durations = kernels::omp::word_durations(traits, base_ms, profile, tuning);

  std::vector<Rgb> colors;
  if (gradient) {
    gradient->validate();
    colors = assign_colors(wrap_lines(doc, static_cast<std::size_t>(gradient->line_width_cpl)),
                           *gradient);
  }

  schedule.entries.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    ScheduleEntry e;
    e.token_index = words[i];
    e.text = doc.token(words[i]).text;
    e.duration_ms = durations[i];
    e.orp_index = orp_index(traits[i].length);
    e.unfamiliar = traits[i].unfamiliar;
    if (gradient) e.color = colors[i];
    schedule.total_ms += e.duration_ms;
    schedule.entries.push_back(std::move(e));
  }
  return schedule;
}

}  // namespace thoth
