#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>

#include "thoth/gradient.hpp"
#include "thoth/readability.hpp"
#include "thoth/scheduler.hpp"
#include "thoth/statistics.hpp"

namespace thoth {

using Json = nlohmann::ordered_json;

inline constexpr int kScheduleFormatVersion = 1;

Json statistics_to_json(const TextStatistics& stats);

/// {"scores":{<metric_key>:{"raw","grade","reliable"}...},"consensus_grade",
/// "estimated_age","difficult_word_fraction"}. Flesch Reading Ease shows its
/// report band as "grade".
Json report_to_json(const ReadabilityReport& report);

/// {"version":1,"effective_wpm","total_ms","entries":[{"i","text","ms",
/// "orp","unfamiliar","color"}]}. "color" is omitted for uncolored entries.
Json schedule_to_json(const DisplaySchedule& schedule);

/// Per-word colors over the wrapped paragraph view:
/// {"width","serpentine","color_a","color_b","words":[{"i","text","color"}],
///  "lines":[{"first","last"}],"sentence_starts":[...]}. Word positions in
/// "lines" and "sentence_starts" index "words", which lines up one-to-one
/// with schedule entries.
Json gradient_to_json(const TokenizedDocument& doc, const GradientConfig& config);

Json profile_to_json(const ReaderProfile& profile);

/// Reads the ReaderProfile fields present in `j` on top of the defaults and
/// validates the result. Throws Error(Validation) naming the field for a
/// wrong type, unknown lexicon or out-of-range value.
ReaderProfile profile_from_json(const Json& j);

Json error_to_json(std::string_view code, std::string_view message);

/// Canonical serialization shared by the service and the CLI: compact,
/// UTF-8, newline-terminated.
std::string to_body(const Json& j);

}  // namespace thoth
