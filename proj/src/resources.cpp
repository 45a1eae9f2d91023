#include "thoth/resources.hpp"

#include <cstdlib>

#include "thoth/error.hpp"

#ifndef THOTH_DEFAULT_LEXICON_DIR
#define THOTH_DEFAULT_LEXICON_DIR "data"
#endif

namespace thoth {

Resources Resources::load(const std::filesystem::path& dir) {
  return Resources{
      SyllableExceptions::load(dir / "syllables.txt"),
      FamiliarityLexicon::load(LexiconName::DaleChall, dir / "dale_chall.txt"),
      FamiliarityLexicon::load(LexiconName::Spache, dir / "spache.txt"),
      FamiliarityLexicon::load(LexiconName::Top1000, dir / "top1000.txt"),
  };
}

std::filesystem::path Resources::default_dir() {
  if (const char* env = std::getenv("THOTH_LEXICON_DIR"); env && *env) return env;
  return THOTH_DEFAULT_LEXICON_DIR;
}

const Resources& Resources::shared() {
  static const Resources instance = load(default_dir());
  return instance;
}

const FamiliarityLexicon& Resources::lexicon(LexiconName name) const {
  switch (name) {
    case LexiconName::Spache: return spache;
    case LexiconName::Top1000: return top1000;
    case LexiconName::DaleChall: break;
  }
  return dale_chall;
}

Analysis analyze(std::string_view text, const Resources& resources, LexiconName lexicon) {
  Analysis a;
  a.doc = tokenize(text);
  if (a.doc.word_count() == 0) throw insufficient_text("no words");
  const FamiliarityLexicon& lex = resources.lexicon(lexicon);
  a.stats = compute_statistics(a.doc, lex, resources.syllables);
  a.spache_unfamiliar_fraction = difficult_fraction(a.doc, resources.spache);
  a.report = build_report(a.stats, difficult_fraction(a.doc, lex), a.spache_unfamiliar_fraction);
  return a;
}

DisplaySchedule schedule_text(std::string_view text, const ReaderProfile& profile,
                              const Resources& resources,
                              const std::optional<GradientConfig>& gradient) {
  profile.validate();
  if (gradient) gradient->validate();
  const Analysis a = analyze(text, resources, profile.lexicon);
  return build_schedule(a.doc, a.report, profile, resources.lexicon(profile.lexicon), gradient);
}

}  // namespace thoth
