#include "thoth/readability.hpp"

#include <algorithm>
#include <cmath>

#include "thoth/error.hpp"

namespace thoth {

namespace {

struct Ratios {
  double words;
  double sentences;
  double words_per_sentence;
};

Ratios ratios(const TextStatistics& s, const char* metric) {
  if (s.word_count == 0 || s.sentence_count == 0) {
    throw insufficient_text(std::string(metric) + " needs at least one word and one sentence");
  }
  const auto w = static_cast<double>(s.word_count);
  const auto n = static_cast<double>(s.sentence_count);
  return {w, n, w / n};
}

MetricScore graded(Metric m, double raw) {
  return MetricScore{m, raw, clamp_grade(raw), true};
}

}  // namespace

std::string_view metric_key(Metric metric) {
  switch (metric) {
    case Metric::ARI: return "ari";
    case Metric::FleschReadingEase: return "flesch_reading_ease";
    case Metric::FleschKincaidGrade: return "flesch_kincaid_grade";
    case Metric::GunningFog: return "gunning_fog";
    case Metric::SMOG: return "smog";
    case Metric::ColemanLiau: return "coleman_liau";
    case Metric::DaleChall: return "dale_chall";
    case Metric::Spache: return "spache";
  }
  return "?";
}

const MetricScore& ReadabilityReport::score(Metric metric) const {
  for (const auto& s : scores) {
    if (s.metric == metric) return s;
  }
  throw Error(ErrorCode::Argument, "report has no " + std::string(metric_key(metric)) + " score");
}

double clamp_grade(double grade) { return std::clamp(grade, kMinGrade, kMaxGrade); }

double dale_chall_band(double raw) {
  if (raw < 5.0) return 4.0;
  if (raw < 6.0) return 5.5;
  if (raw < 7.0) return 7.5;
  if (raw < 8.0) return 9.5;
  if (raw < 9.0) return 11.5;
  if (raw < 10.0) return 14.0;
  return 16.0;
}

double flesch_ease_band(double ease) {
  if (ease >= 90.0) return 5.0;
  if (ease >= 80.0) return 6.0;
  if (ease >= 70.0) return 7.0;
  if (ease >= 60.0) return 8.5;
  if (ease >= 50.0) return 11.0;
  if (ease >= 30.0) return 14.0;
  return 17.0;
}

MetricScore score_ari(const TextStatistics& s) {
  const auto r = ratios(s, "ARI");
  const double raw =
      4.71 * (static_cast<double>(s.char_count) / r.words) + 0.5 * r.words_per_sentence - 21.43;
  return graded(Metric::ARI, raw);
}

MetricScore score_flesch_reading_ease(const TextStatistics& s) {
  const auto r = ratios(s, "Flesch");
  const double raw = 206.835 - 1.015 * r.words_per_sentence -
                     84.6 * (static_cast<double>(s.syllable_count) / r.words);
  return MetricScore{Metric::FleschReadingEase, raw, std::nullopt, true};
}

MetricScore score_flesch_kincaid_grade(const TextStatistics& s) {
  const auto r = ratios(s, "Flesch-Kincaid");
  const double raw = 0.39 * r.words_per_sentence +
                     11.8 * (static_cast<double>(s.syllable_count) / r.words) - 15.59;
  return graded(Metric::FleschKincaidGrade, raw);
}

MetricScore score_fog(const TextStatistics& s) {
  const auto r = ratios(s, "Gunning Fog");
  const double raw = 0.4 * (r.words_per_sentence +
                            100.0 * (static_cast<double>(s.complex_word_count) / r.words));
  return graded(Metric::GunningFog, raw);
}

MetricScore score_smog(const TextStatistics& s) {
  const auto r = ratios(s, "SMOG");
  const double raw =
      1.0430 * std::sqrt(static_cast<double>(s.polysyllable_count) * 30.0 / r.sentences) + 3.1291;
  auto score = graded(Metric::SMOG, raw);
  score.reliable = s.sentence_count >= kSmogMinSentences;
  return score;
}

MetricScore score_coleman_liau(const TextStatistics& s) {
  const auto r = ratios(s, "Coleman-Liau");
  const double letters_per_100 = 100.0 * static_cast<double>(s.letter_count) / r.words;
  const double sentences_per_100 = 100.0 * r.sentences / r.words;
  return graded(Metric::ColemanLiau, 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8);
}

MetricScore score_dale_chall(const TextStatistics& s, double difficult_fraction) {
  const auto r = ratios(s, "Dale-Chall");
  double raw = 0.1579 * (100.0 * difficult_fraction) + 0.0496 * r.words_per_sentence;
  if (difficult_fraction > kDaleChallAdjustThreshold) raw += kDaleChallAdjustment;
  return MetricScore{Metric::DaleChall, raw, dale_chall_band(raw), true};
}

MetricScore score_spache(const TextStatistics& s, double unfamiliar_fraction) {
  const auto r = ratios(s, "Spache");
  const double raw =
      0.121 * r.words_per_sentence + 0.082 * (100.0 * unfamiliar_fraction) + 0.659;
  return graded(Metric::Spache, raw);
}

Consensus consensus(std::span<const MetricScore> scores) {
  std::vector<double> grades;
  for (const auto& s : scores) {
    if (s.grade_level) grades.push_back(*s.grade_level);
  }
  if (grades.empty()) throw insufficient_text("no grade-bearing scores");
  std::sort(grades.begin(), grades.end());
  const std::size_t m = grades.size();
  const double median = m % 2 ? grades[m / 2] : (grades[m / 2 - 1] + grades[m / 2]) / 2.0;
  return {median, median + kAgeOffset};
}

ReadabilityReport build_report(const TextStatistics& stats, double difficult_fraction,
                               double spache_unfamiliar_fraction) {
  ReadabilityReport report;
  report.scores = {
      score_ari(stats),
      score_flesch_reading_ease(stats),
      score_flesch_kincaid_grade(stats),
      score_fog(stats),
      score_smog(stats),
      score_coleman_liau(stats),
      score_dale_chall(stats, difficult_fraction),
      score_spache(stats, spache_unfamiliar_fraction),
  };
  const auto c = consensus(report.scores);
  report.consensus_grade = c.grade;
  report.estimated_age = c.age;
  report.difficult_word_fraction = difficult_fraction;
  return report;
}

}  // namespace thoth
