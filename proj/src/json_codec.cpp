#include "thoth/json_codec.hpp"

#include "thoth/error.hpp"

namespace thoth {

namespace {

Error bad_field(const std::string& field, const std::string& rule) {
  return Error(ErrorCode::Validation, "profile." + field + " " + rule);
}

double number_field(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number()) throw bad_field(key, "must be a number");
  return v.get<double>();
}

bool bool_field(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_boolean()) throw bad_field(key, "must be a boolean");
  return v.get<bool>();
}

}  // namespace

Json statistics_to_json(const TextStatistics& s) {
  return Json{
      {"char_count", s.char_count},
      {"letter_count", s.letter_count},
      {"word_count", s.word_count},
      {"sentence_count", s.sentence_count},
      {"syllable_count", s.syllable_count},
      {"polysyllable_count", s.polysyllable_count},
      {"complex_word_count", s.complex_word_count},
      {"difficult_word_count", s.difficult_word_count},
  };
}

Json report_to_json(const ReadabilityReport& report) {
  Json scores = Json::object();
  for (const MetricScore& m : report.scores) {
    const double grade = m.metric == Metric::FleschReadingEase ? flesch_ease_band(m.raw_score)
                                                               : m.grade_level.value_or(0.0);
    scores[std::string(metric_key(m.metric))] =
        Json{{"raw", m.raw_score}, {"grade", grade}, {"reliable", m.reliable}};
  }
  return Json{
      {"scores", std::move(scores)},
      {"consensus_grade", report.consensus_grade},
      {"estimated_age", report.estimated_age},
      {"difficult_word_fraction", report.difficult_word_fraction},
  };
}

Json schedule_to_json(const DisplaySchedule& schedule) {
  Json entries = Json::array();
  for (const ScheduleEntry& e : schedule.entries) {
    Json item{
        {"i", e.token_index}, {"text", e.text},           {"ms", e.duration_ms},
        {"orp", e.orp_index}, {"unfamiliar", e.unfamiliar},
    };
    if (e.color) item["color"] = to_hex(*e.color);
    entries.push_back(std::move(item));
  }
  return Json{
      {"version", kScheduleFormatVersion},
      {"effective_wpm", schedule.effective_wpm},
      {"total_ms", schedule.total_ms},
      {"entries", std::move(entries)},
  };
}

Json gradient_to_json(const TokenizedDocument& doc, const GradientConfig& config) {
  config.validate();
  const auto lines = wrap_lines(doc, static_cast<std::size_t>(config.line_width_cpl));
  const auto colors = assign_colors(lines, config);
  const auto words = doc.word_indices();

  Json word_list = Json::array();
  Json sentence_starts = Json::array();
  for (std::size_t k = 0; k < words.size(); ++k) {
    word_list.push_back(Json{{"i", words[k]}, {"text", doc.token(words[k]).text},
                             {"color", to_hex(colors[k])}});
    if (doc.starts_sentence(words[k])) sentence_starts.push_back(k);
  }
  Json line_list = Json::array();
  for (const LineRange& l : lines) line_list.push_back(Json{{"first", l.first}, {"last", l.last}});

  return Json{
      {"width", config.line_width_cpl},
      {"serpentine", config.serpentine},
      {"color_a", to_hex(config.color_a)},
      {"color_b", to_hex(config.color_b)},
      {"words", std::move(word_list)},
      {"lines", std::move(line_list)},
      {"sentence_starts", std::move(sentence_starts)},
  };
}

Json profile_to_json(const ReaderProfile& p) {
  Json j{{"base_wpm", p.base_wpm}};
  j["reader_age"] = p.reader_age ? Json(*p.reader_age) : Json(nullptr);
  j["unfamiliar_multiplier"] = p.unfamiliar_multiplier;
  j["lexicon"] = std::string(to_string(p.lexicon));
  j["length_modifier_enabled"] = p.length_modifier_enabled;
  j["punctuation_pauses_enabled"] = p.punctuation_pauses_enabled;
  return j;
}

ReaderProfile profile_from_json(const Json& j) {
  ReaderProfile p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw Error(ErrorCode::Validation, "profile must be an object");
  p.base_wpm = number_field(j, "base_wpm", p.base_wpm);
  if (j.contains("reader_age") && !j.at("reader_age").is_null()) {
    p.reader_age = number_field(j, "reader_age", 0.0);
  }
  p.unfamiliar_multiplier = number_field(j, "unfamiliar_multiplier", p.unfamiliar_multiplier);
  if (j.contains("lexicon")) {
    const Json& v = j.at("lexicon");
    auto name = v.is_string() ? parse_lexicon_name(v.get<std::string>()) : std::nullopt;
    if (!name) throw bad_field("lexicon", "must be one of dale-chall, spache, top1000");
    p.lexicon = *name;
  }
  p.length_modifier_enabled = bool_field(j, "length_modifier_enabled", p.length_modifier_enabled);
  p.punctuation_pauses_enabled =
      bool_field(j, "punctuation_pauses_enabled", p.punctuation_pauses_enabled);
  p.validate();
  return p;
}

Json error_to_json(std::string_view code, std::string_view message) {
  return Json{{"error", Json{{"code", std::string(code)}, {"message", std::string(message)}}}};
}

std::string to_body(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace thoth
