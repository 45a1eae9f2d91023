#include <CLI11.hpp>
#include <httplib.h>
#include <pthread.h>
#include <signal.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "thoth/error.hpp"
#include "thoth/json_codec.hpp"
#include "thoth/resources.hpp"
#include "thoth/service.hpp"

namespace {

using namespace thoth;

enum Exit { kOk = 0, kIo = 1, kValidation = 2, kUnfamiliar = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("cannot read standard input");
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

LexiconName lexicon_from(const std::string& name) {
  auto parsed = parse_lexicon_name(name);
  if (!parsed) {
    throw Error(ErrorCode::Validation,
                "unknown lexicon '" + name + "' (expected dale-chall, spache or top1000)");
  }
  return *parsed;
}

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

constexpr std::string_view display_name(Metric m) {
  switch (m) {
    case Metric::ARI: return "Automated Readability";
    case Metric::FleschReadingEase: return "Flesch Reading Ease";
    case Metric::FleschKincaidGrade: return "Flesch-Kincaid Grade";
    case Metric::GunningFog: return "Gunning Fog";
    case Metric::SMOG: return "SMOG";
    case Metric::ColemanLiau: return "Coleman-Liau";
    case Metric::DaleChall: return "Dale-Chall";
    case Metric::Spache: return "Spache";
  }
  return "?";
}

void print_table(const Analysis& a, LexiconName lexicon) {
  std::printf("%-24s %9s %7s  %s\n", "metric", "raw", "grade", "note");
  for (const MetricScore& m : a.report.scores) {
    std::string grade = m.grade_level ? fixed(*m.grade_level) : fixed(flesch_ease_band(m.raw_score));
    std::string note = m.grade_level ? "" : "band only";
    if (!m.reliable) note = "unreliable (< 30 sentences)";
    std::printf("%-24s %9s %7s  %s\n", std::string(display_name(m.metric)).c_str(),
                fixed(m.raw_score).c_str(), grade.c_str(), note.c_str());
  }
  std::printf("\nconsensus grade  %s\n", fixed(a.report.consensus_grade).c_str());
  std::printf("estimated age    %s\n", fixed(a.report.estimated_age).c_str());
  std::printf("difficult words  %s%% (%s)\n", fixed(100.0 * a.report.difficult_word_fraction, 1).c_str(),
              std::string(to_string(lexicon)).c_str());
  std::printf("words %zu, sentences %zu, syllables %zu\n", a.stats.word_count,
              a.stats.sentence_count, a.stats.syllable_count);
}

int serve(std::optional<int> port_flag, const std::string& host) {
  ServiceConfig config = ServiceConfig::from_env();
  if (port_flag) config.port = *port_flag;

  // Block the shutdown signals before any thread exists so that only the
  // sigwait thread sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  Service service(config, Resources::shared());
  httplib::Server server;
  service.mount(server);
  if (!server.bind_to_port(host, config.port)) {
    std::cerr << "thoth: cannot listen on " << host << ":" << config.port
              << " (address in use or not permitted)\n";
    return kIo;
  }
  std::cerr << "thoth: listening on http://" << host << ":" << config.port
            << " (data " << config.data_dir.string() << ")\n";

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  const bool ok = server.listen_after_bind();
  ::kill(::getpid(), SIGTERM);  // release the waiter if listen ended on its own
  waiter.join();
  std::cerr << "thoth: stopped\n";
  return ok ? kOk : kIo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thoth: readability analysis and RSVP display schedules"};
  app.set_version_flag("--version", "thoth 1.0.0");
  app.require_subcommand(1);

  std::string input;
  std::string lexicon_name = "dale-chall";

  auto* analyze_cmd = app.add_subcommand("analyze", "Readability report for a text file");
  bool as_json = false;
  analyze_cmd->add_option("path", input, "Input file, or - for stdin")->required();
  analyze_cmd->add_option("--lexicon", lexicon_name, "dale-chall, spache or top1000");
  analyze_cmd->add_flag("--json", as_json, "Print the report as JSON");

  auto* schedule_cmd = app.add_subcommand("schedule", "Per-word display schedule as JSON");
  ReaderProfile profile;
  std::optional<double> age;
  bool no_length = false;
  bool no_punct = false;
  std::string out_path;
  schedule_cmd->add_option("path", input, "Input file, or - for stdin")->required();
  schedule_cmd->add_option("--wpm", profile.base_wpm, "Base words per minute")->capture_default_str();
  schedule_cmd->add_option("--age", age, "Reader age in years");
  schedule_cmd->add_option("--multiplier", profile.unfamiliar_multiplier,
                           "Duration factor for unfamiliar words")
      ->capture_default_str();
  schedule_cmd->add_flag("--no-length", no_length, "Disable the long-word modifier");
  schedule_cmd->add_flag("--no-punct", no_punct, "Disable punctuation pauses");
  schedule_cmd->add_option("--lexicon", lexicon_name, "dale-chall, spache or top1000");
  schedule_cmd->add_option("-o,--output", out_path, "Write JSON here instead of stdout");

  auto* lexicon_cmd = app.add_subcommand("lexicon", "Inspect the familiarity word lists");
  lexicon_cmd->require_subcommand(1);
  auto* check_cmd = lexicon_cmd->add_subcommand("check", "Is a word familiar?");
  std::string word;
  check_cmd->add_option("word", word, "Word to look up")->required();
  check_cmd->add_option("--lexicon", lexicon_name, "dale-chall, spache or top1000");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  std::optional<int> port;
  std::string host = "0.0.0.0";
  serve_cmd->add_option("--port", port, "Port (default $THOTH_PORT, else 8080)")
      ->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Address to bind")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*analyze_cmd) {
      const LexiconName lexicon = lexicon_from(lexicon_name);
      const std::string text = read_input(input);
      const Analysis a = analyze(text, Resources::shared(), lexicon);
      if (as_json) {
        std::cout << to_body(report_to_json(a.report));
      } else {
        print_table(a, lexicon);
      }
      return kOk;
    }
    if (*schedule_cmd) {
      profile.lexicon = lexicon_from(lexicon_name);
      profile.reader_age = age;
      profile.length_modifier_enabled = !no_length;
      profile.punctuation_pauses_enabled = !no_punct;
      profile.validate();
      const std::string text = read_input(input);
      const std::string body =
          to_body(schedule_to_json(schedule_text(text, profile, Resources::shared())));
      if (out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        out << body;
        out.close();
        if (!out) throw IoError("cannot write " + out_path);
      }
      return kOk;
    }
    if (*check_cmd) {
      const FamiliarityLexicon& lex = Resources::shared().lexicon(lexicon_from(lexicon_name));
      const std::string normalized = normalize_word(word);
      if (normalized.empty()) throw Error(ErrorCode::Validation, "'" + word + "' has no letters");
      if (auto base = lex.match(normalized)) {
        std::cout << "familiar " << *base << "\n";
        return kOk;
      }
      std::cout << "unfamiliar " << normalized << "\n";
      return kUnfamiliar;
    }
    if (*serve_cmd) return serve(port, host);
  } catch (const IoError& e) {
    std::cerr << "thoth: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "thoth: " << e.what() << "\n";
    return e.code() == ErrorCode::Load ? kIo : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "thoth: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
