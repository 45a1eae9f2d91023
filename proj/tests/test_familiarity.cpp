#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "support.hpp"
#include "thoth/error.hpp"
#include "thoth/familiarity.hpp"

using namespace thoth;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("thoth_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

FamiliarityLexicon small(bool inflections = true) {
  return FamiliarityLexicon(LexiconName::DaleChall,
                            {"cat", "baby", "box", "hope", "run", "stop", "glass", "go", "bus"},
                            inflections);
}

}  // namespace

TEST_CASE("lexicon names") {
  CHECK(to_string(LexiconName::DaleChall) == "dale-chall");
  CHECK(to_string(LexiconName::Spache) == "spache");
  CHECK(to_string(LexiconName::Top1000) == "top1000");
  CHECK(parse_lexicon_name("spache") == LexiconName::Spache);
  CHECK_FALSE(parse_lexicon_name("klingon").has_value());
  CHECK_FALSE(parse_lexicon_name("Dale-Chall").has_value());
}

TEST_CASE("load: dedup, comments and blank lines") {
  const auto path = write_temp("lex_small.txt", "the\nThe\n# c\n\n");
  const auto lex = FamiliarityLexicon::load(LexiconName::Top1000, path);
  CHECK(lex.size() == 1);
  CHECK(lex.contains("the"));
  CHECK(lex.name() == LexiconName::Top1000);
  std::filesystem::remove(path);
}

TEST_CASE("load: errors") {
  CHECK_THROWS_AS(FamiliarityLexicon::load(LexiconName::DaleChall, "/nonexistent/list.txt"),
                  Error);
  const auto bad = write_temp("lex_bad.txt", "fine\n\xFF\xFE\n");
  const auto empty = write_temp("lex_empty.txt", "# nothing\n\n");
  for (const auto& path : {bad, empty}) {
    try {
      FamiliarityLexicon::load(LexiconName::DaleChall, path);
      FAIL("expected a load error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Load);
    }
    std::filesystem::remove(path);
  }
}

TEST_CASE("shipped lists") {
  const auto& r = test_support::resources();
  CHECK(r.dale_chall.size() == 2941);
  CHECK(r.spache.size() > 900);
  CHECK(r.top1000.size() > 900);
  CHECK(r.top1000.size() <= 1000);

  CHECK(r.dale_chall.is_familiar("about"));
  CHECK(r.dale_chall.contains("run"));
  CHECK(r.dale_chall.contains("running"));  // listed itself, so no rule is needed
  CHECK(r.dale_chall.match("running") == "running");
  CHECK(r.dale_chall.match("runs") == "run");
  CHECK(r.dale_chall.match("jumping") == "jump");
  CHECK(r.dale_chall.match("hopping") == "hop");
  CHECK_FALSE(r.dale_chall.is_familiar("hagiography"));
  CHECK_FALSE(r.dale_chall.is_familiar("lugubrious"));
  CHECK_FALSE(r.dale_chall.is_familiar("licentiousness"));
}

TEST_CASE("inflection rules") {
  const auto lex = small();
  CHECK(lex.match("cat") == "cat");
  CHECK(lex.match("cats") == "cat");
  CHECK(lex.match("cat's") == "cat");
  CHECK(lex.match("cat\xE2\x80\x99s") == "cat");
  CHECK(lex.match("babies") == "baby");
  CHECK(lex.match("boxes") == "box");
  CHECK(lex.match("goes") == "go");
  CHECK(lex.match("buses") == "bus");
  CHECK(lex.match("hoped") == "hope");
  CHECK(lex.match("hoping") == "hope");
  CHECK(lex.match("running") == "run");
  CHECK(lex.match("stopped") == "stop");
  CHECK(lex.match("glasses") == "glass");
  CHECK_FALSE(lex.match("glas").has_value());
  CHECK_FALSE(lex.match("catss").has_value());   // one suffix at most
  CHECK_FALSE(lex.match("boxing's").has_value());
  CHECK_FALSE(lex.match("ss").has_value());
  CHECK_FALSE(lex.match("").has_value());
  CHECK_FALSE(lex.match("1999").has_value());
}

TEST_CASE("inflections can be switched off") {
  const auto lex = small(false);
  CHECK(lex.is_familiar("cat"));
  CHECK_FALSE(lex.is_familiar("cats"));
  CHECK_FALSE(lex.is_familiar("running"));
}

TEST_CASE("numbers are never familiar") {
  const auto lex = FamiliarityLexicon(LexiconName::Top1000, {"1999", "one"});
  const auto doc = tokenize("1999 one");
  CHECK(is_unfamiliar_token(doc.token(0), lex));
  CHECK_FALSE(is_unfamiliar_token(doc.token(2), lex));
}

TEST_CASE("difficult_fraction") {
  const auto lex = small();
  CHECK(difficult_fraction(tokenize("Cats run. A box, a glass!"), lex) == doctest::Approx(2.0 / 6.0));
  CHECK(difficult_fraction(tokenize("cat cats running"), lex) == 0.0);
  CHECK(difficult_fraction(tokenize("zebra quagga"), lex) == 1.0);
  CHECK_THROWS_AS(difficult_fraction(tokenize(" ... "), lex), Error);
}

TEST_CASE("property: difficult_fraction equals a token-by-token recount") {
  const auto& r = test_support::resources();
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto doc = tokenize(test_support::random_prose(rng, 1 + round % 40));
    std::size_t familiar = 0;
    for (std::size_t i : doc.word_indices()) {
      const Token& t = doc.token(i);
      if (t.kind == TokenKind::Word && r.dale_chall.match(normalize_word(t.text))) ++familiar;
    }
    const double brute = 1.0 - static_cast<double>(familiar) / static_cast<double>(doc.word_count());
    REQUIRE(difficult_fraction(doc, r.dale_chall) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("property: adding a word never makes a familiar word unfamiliar") {
  const auto& r = test_support::resources();
  std::mt19937_64 rng(3);
  const std::vector<std::string> probes = {"running", "hagiography", "babies", "hoping",
                                           "stopped", "cats",        "glasses", "lugubrious",
                                           "readings", "river's"};
  std::vector<std::string> additions(r.top1000.words().begin(), r.top1000.words().end());
  additions.insert(additions.end(), {"hagiography", "baby", "read", "river"});
  FamiliarityLexicon lex = r.spache;
  std::vector<bool> before;
  for (const auto& p : probes) before.push_back(lex.is_familiar(p));
  std::shuffle(additions.begin(), additions.end(), rng);
  for (std::size_t k = 0; k < additions.size(); k += 37) {
    lex = lex.with_word(additions[k]);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const bool now = lex.is_familiar(probes[i]);
      REQUIRE_FALSE((before[i] && !now));
      before[i] = now;
    }
  }
  CHECK(lex.with_word("Hagiography").is_familiar("hagiography"));
}
