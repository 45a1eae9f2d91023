#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thoth/statistics.hpp"

namespace thoth {

enum class Metric {
  ARI,
  FleschReadingEase,
  FleschKincaidGrade,
  GunningFog,
  SMOG,
  ColemanLiau,
  DaleChall,
  Spache,
};

inline constexpr std::array<Metric, 8> kAllMetrics = {
    Metric::ARI,         Metric::FleschReadingEase, Metric::FleschKincaidGrade,
    Metric::GunningFog,  Metric::SMOG,              Metric::ColemanLiau,
    Metric::DaleChall,   Metric::Spache};

/// JSON key of a metric ("ari", "flesch_reading_ease", ...).
std::string_view metric_key(Metric metric);

inline constexpr double kMinGrade = 0.0;
inline constexpr double kMaxGrade = 22.0;
inline constexpr double kAgeOffset = 5.0;  // school-entry age
inline constexpr double kDaleChallAdjustThreshold = 0.05;
inline constexpr double kDaleChallAdjustment = 3.6365;
inline constexpr std::size_t kSmogMinSentences = 30;

struct MetricScore {
  Metric metric = Metric::ARI;
  double raw_score = 0.0;
  std::optional<double> grade_level;  // absent for Flesch Reading Ease
  bool reliable = true;
};

struct ReadabilityReport {
  std::vector<MetricScore> scores;  // one per metric, kAllMetrics order
  double consensus_grade = 0.0;
  double estimated_age = 0.0;
  double difficult_word_fraction = 0.0;

  const MetricScore& score(Metric metric) const;
};

double clamp_grade(double grade);

/// Grade band for a Dale-Chall raw score (band midpoints, 4 .. 16).
double dale_chall_band(double raw);

/// Report-only grade band for a Flesch Reading Ease score.
double flesch_ease_band(double ease);

// All scorers throw insufficient-text when word_count or sentence_count is 0.
MetricScore score_ari(const TextStatistics& stats);
MetricScore score_flesch_reading_ease(const TextStatistics& stats);
MetricScore score_flesch_kincaid_grade(const TextStatistics& stats);
MetricScore score_fog(const TextStatistics& stats);
MetricScore score_smog(const TextStatistics& stats);
MetricScore score_coleman_liau(const TextStatistics& stats);
MetricScore score_dale_chall(const TextStatistics& stats, double difficult_fraction);
/// Revised (1974) Spache coefficients.
MetricScore score_spache(const TextStatistics& stats, double unfamiliar_fraction);

struct Consensus {
  double grade;
  double age;
};

/// Median of the present grade levels; age = grade + 5. Throws
/// insufficient-text when no score carries a grade.
Consensus consensus(std::span<const MetricScore> scores);

/// All eight scores plus consensus. Flesch Reading Ease never enters the
/// consensus.
ReadabilityReport build_report(const TextStatistics& stats, double difficult_fraction,
                               double spache_unfamiliar_fraction);

}  // namespace thoth
