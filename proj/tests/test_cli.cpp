#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <arpa/inet.h>
#include <httplib.h>
#include <netinet/in.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <thread>

#include "support.hpp"
#include "thoth/service.hpp"

extern char** environ;

using namespace thoth;
using test_support::fixture;
using test_support::read_file;
using test_support::TempDir;

namespace {

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI through the shell with `args` appended verbatim.
Run cli(const std::string& args, const std::string& stdin_text = "") {
  static TempDir scratch;
  const auto in = scratch.path() / "stdin";
  const auto out = scratch.path() / "stdout";
  const auto err = scratch.path() / "stderr";
  {
    std::ofstream f(in, std::ios::binary);
    f << stdin_text;
  }
  const std::string cmd = std::string(THOTH_CLI_PATH) + " " + args + " <" + quote(in) + " >" +
                          quote(out) + " 2>" + quote(err);
  const int status = std::system(cmd.c_str());
  Run r;
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

std::string fx(const std::string& name) { return quote(fixture(name).string()); }

int free_port() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

// Background `thoth serve` with stderr captured to a file.
class Server {
 public:
  Server(const std::string& env, const std::string& args, const std::filesystem::path& log) {
    const std::string cmd = "exec env " + env + " " + THOTH_CLI_PATH + " serve " + args +
                            " 2>" + quote(log) + " >/dev/null";
    const char* argv[] = {"/bin/sh", "-c", cmd.c_str(), nullptr};
    REQUIRE(::posix_spawn(&pid_, "/bin/sh", nullptr, nullptr, const_cast<char**>(argv), environ) ==
            0);
  }
  ~Server() {
    if (pid_ > 0) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, nullptr, 0);
    }
  }
  int interrupt_and_wait() {
    ::kill(pid_, SIGINT);
    int status = 0;
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  // Exit code if the process ends on its own within the timeout, else -1.
  int wait_for_exit(std::chrono::milliseconds timeout) {
    const auto until = std::chrono::steady_clock::now() + timeout;
    while (std::chrono::steady_clock::now() < until) {
      int status = 0;
      if (::waitpid(pid_, &status, WNOHANG) == pid_) {
        pid_ = -1;
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
    return -1;
  }

 private:
  pid_t pid_ = -1;
};

bool wait_healthy(int port) {
  httplib::Client c("127.0.0.1", port);
  c.set_connection_timeout(0, 200000);
  for (int i = 0; i < 150; ++i) {
    if (auto r = c.Post("/api/v1/analyze", R"({"text":"The cat sat."})", "application/json")) {
      return r->status == 200;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  return false;
}

}  // namespace

TEST_CASE("version") {
  const Run r = cli("--version");
  CHECK(r.exit == 0);
  CHECK(r.out == "thoth 1.0.0\n");
}

TEST_CASE("analyze") {
  TempDir dir;
  ServiceConfig c;
  c.data_dir = dir.path();
  Service svc(c, test_support::resources());

  const Run piped = cli("analyze - --json", "The cat sat.\n");
  CHECK(piped.exit == 0);
  CHECK(piped.out == svc.analyze(to_body(Json{{"text", "The cat sat.\n"}})).body);

  for (const char* stem : test_support::kOracleFixtures) {
    CAPTURE(stem);
    const std::string name = std::string(stem) + ".txt";
    for (const char* lex : {"dale-chall", "spache", "top1000"}) {
      const Run r = cli("analyze " + fx(name) + " --json --lexicon " + lex);
      CHECK(r.exit == 0);
      CHECK(r.out ==
            svc.analyze(to_body(Json{{"text", read_file(fixture(name))}, {"lexicon", lex}})).body);
    }
  }

  const Run table = cli("analyze " + fx("sample_01.txt"));
  CHECK(table.exit == 0);
  CHECK(table.out.find("Flesch-Kincaid Grade") != std::string::npos);
  CHECK(table.out.find("consensus grade") != std::string::npos);
  CHECK(table.out.find("unreliable") != std::string::npos);

  // Only the difficult-word based metrics move with the lexicon.
  const Json dc = Json::parse(cli("analyze " + fx("mixed_01.txt") + " --json").out);
  const Json top = Json::parse(cli("analyze " + fx("mixed_01.txt") + " --json --lexicon top1000").out);
  for (const auto& [name, score] : dc["scores"].items()) {
    CAPTURE(name);
    if (name == "dale_chall") {
      CHECK(score != top["scores"][name]);
    } else {
      CHECK(score == top["scores"][name]);
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(cli("analyze -", "").exit == 2);
  CHECK(cli("analyze -", " \n").exit == 2);
  CHECK(cli("analyze /nonexistent/file.txt").exit == 1);
  CHECK(cli("analyze - --lexicon klingon", "Hi.").exit == 2);
  CHECK(cli("analyze -", "bad \xff").exit == 2);
  CHECK(cli("schedule - --wpm 10", "Hi.").exit == 2);
  CHECK(cli("schedule - --wpm 2000", "Hi.").exit == 2);
  CHECK(cli("schedule - --multiplier 0.5", "Hi.").exit == 2);
  CHECK(cli("schedule - --age -1", "Hi.").exit == 2);
  CHECK(cli("schedule - --wpm fast", "Hi.").exit == 2);
  CHECK(cli("").exit == 2);
  CHECK(cli("frobnicate").exit == 2);
  CHECK(cli("schedule /nonexistent/file.txt").exit == 1);
  const Run err = cli("schedule - --wpm 10", "Hi.");
  CHECK(err.err.find("base_wpm") != std::string::npos);
  CHECK(err.out.empty());
}

TEST_CASE("schedule") {
  TempDir dir;
  ServiceConfig c;
  c.data_dir = dir.path();
  Service svc(c, test_support::resources());

  SUBCASE("default run matches the service and the frozen expectation") {
    for (const char* stem : test_support::kOracleFixtures) {
      CAPTURE(stem);
      const std::string name = std::string(stem) + ".txt";
      const Run r = cli("schedule " + fx(name));
      CHECK(r.exit == 0);
      CHECK(r.out == svc.schedule(to_body(Json{{"text", read_file(fixture(name))}})).body);
      CHECK(test_support::json_mismatch(Json::parse(r.out),
                                        test_support::expected(stem)["schedule_default"],
                                        1e-9) == "");
    }
  }
  SUBCASE("flags map onto the profile") {
    const std::string text = read_file(fixture("mixed_01.txt"));
    const Run r = cli("schedule " + fx("mixed_01.txt") +
                      " --wpm 420 --age 11 --multiplier 2 --no-length --lexicon spache");
    CHECK(r.exit == 0);
    const Json profile{{"base_wpm", 420},
                       {"reader_age", 11},
                       {"unfamiliar_multiplier", 2},
                       {"length_modifier_enabled", false},
                       {"lexicon", "spache"}};
    CHECK(r.out == svc.schedule(to_body(Json{{"text", text}, {"profile", profile}})).body);
  }
  SUBCASE("baseline timing") {
    const Json j = Json::parse(
        cli("schedule " + fx("sample_02.txt") + " --wpm 700 --no-length --no-punct --multiplier 1.0")
            .out);
    for (const auto& e : j["entries"]) CHECK(e["ms"].get<double>() == 60000.0 / 700.0);
  }
  SUBCASE("multiplier only changes unfamiliar words") {
    const Json a = Json::parse(cli("schedule " + fx("mixed_01.txt") + " --multiplier 1.0").out);
    const Json b = Json::parse(cli("schedule " + fx("mixed_01.txt") + " --multiplier 1.5").out);
    REQUIRE(a["entries"].size() == b["entries"].size());
    for (std::size_t k = 0; k < a["entries"].size(); ++k) {
      const double x = a["entries"][k]["ms"];
      const double y = b["entries"][k]["ms"];
      CHECK(y == (b["entries"][k]["unfamiliar"].get<bool>() ? x * 1.5 : x));
    }
  }
  SUBCASE("output file and byte stability") {
    TempDir out;
    const auto path = out.path() / "s.json";
    const Run r = cli("schedule " + fx("sample_03.txt") + " -o " + quote(path.string()));
    CHECK(r.exit == 0);
    CHECK(r.out.empty());
    CHECK(read_file(path) == cli("schedule " + fx("sample_03.txt")).out);
    CHECK(cli("schedule " + fx("sample_03.txt") + " -o /nonexistent/dir/s.json").exit == 1);
  }
}

TEST_CASE("lexicon check") {
  Run r = cli("lexicon check about");
  CHECK(r.exit == 0);
  CHECK(r.out == "familiar about\n");
  r = cli("lexicon check hagiography");
  CHECK(r.exit == 3);
  CHECK(r.out == "unfamiliar hagiography\n");
  r = cli("lexicon check running");
  CHECK(r.exit == 0);
  CHECK(r.out == "familiar running\n");  // on the shipped list as-is
  r = cli("lexicon check runs");
  CHECK(r.exit == 0);
  CHECK(r.out == "familiar run\n");
  r = cli("lexicon check hopping");
  CHECK(r.out == "familiar hop\n");
  r = cli("lexicon check About");
  CHECK(r.out == "familiar about\n");
  CHECK(cli("lexicon check 1999").exit == 3);
  CHECK(cli("lexicon check about --lexicon top1000").exit == 0);
  CHECK(cli("lexicon check about --lexicon klingon").exit == 2);
  CHECK(cli("lexicon check '...'").exit == 2);
  CHECK(cli("lexicon").exit == 2);
}

TEST_CASE("serve") {
  TempDir dir;
  const std::string data = "THOTH_DATA_DIR=" + quote((dir.path() / "store").string());

  SUBCASE("flag wins over THOTH_PORT and SIGINT stops cleanly") {
    const int port = free_port();
    const int decoy = free_port();
    Server s(data + " THOTH_PORT=" + std::to_string(decoy),
             "--host 127.0.0.1 --port " + std::to_string(port), dir.path() / "log1");
    REQUIRE(wait_healthy(port));
    CHECK(s.interrupt_and_wait() == 0);
    const std::string log = read_file(dir.path() / "log1");
    CHECK(log.find("listening on http://127.0.0.1:" + std::to_string(port)) != std::string::npos);
  }
  SUBCASE("THOTH_PORT is honored without the flag") {
    const int port = free_port();
    Server s(data + " THOTH_PORT=" + std::to_string(port), "--host 127.0.0.1", dir.path() / "log2");
    REQUIRE(wait_healthy(port));
    CHECK(s.interrupt_and_wait() == 0);
  }
  SUBCASE("occupied port exits 1") {
    httplib::Server blocker;
    const int port = blocker.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    Server s(data, "--host 127.0.0.1 --port " + std::to_string(port), dir.path() / "log3");
    CHECK(s.wait_for_exit(std::chrono::seconds(20)) == 1);
    CHECK(read_file(dir.path() / "log3").find("cannot listen") != std::string::npos);
  }
  SUBCASE("bad port values") {
    CHECK(cli("serve --port 0").exit == 2);
    CHECK(cli("serve --port 70000").exit == 2);
  }
}
