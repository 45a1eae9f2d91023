#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "thoth/json_codec.hpp"
#include "thoth/resources.hpp"
#include "thoth/utf8.hpp"

namespace test_support {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(THOTH_FIXTURE_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline thoth::Json expected(const std::string& stem) {
  return thoth::Json::parse(read_file(fixture(stem + ".expected.json")));
}

inline const thoth::Resources& resources() {
  static const thoth::Resources r = thoth::Resources::load(THOTH_TEST_DATA_DIR);
  return r;
}

inline const char* const kOracleFixtures[] = {
    "sample_01",      "sample_02",        "sample_03", "mixed_01",
    "dc_boundary_at", "dc_boundary_over", "fog_terms", "dialogue_01",
};

/// Random valid UTF-8 drawn from a pool weighted toward the characters the
/// tokenizer treats specially.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_code_points) {
  static const char32_t kPool[] = {
      U'a', U'b', U'e', U'i', U'o', U'u', U'y', U'Z', U'T', U'0', U'7', U' ', U' ', U' ',
      U'\n', U'\t', U'.', U'.', U',', U'!', U'?', U';', U':', U'\'', U'-', U'"', U'(', U')',
      0x2019, 0x2010, 0x201C, 0x201D, 0x00E9, 0x00C9, 0x00DF, 0x00D7, 0x00A0, 0x2003,
      0x0436, 0x4E2D, 0x1F600, 0x0301, 0x3000, 0xFEFF, 0x00AB, 0x00BB,
  };
  std::uniform_int_distribution<std::size_t> len(0, max_code_points);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  std::uniform_int_distribution<std::uint32_t> any(0x20, 0x10FFFF);
  std::bernoulli_distribution wild(0.1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    char32_t cp = kPool[pick(rng)];
    if (wild(rng)) {
      do {
        cp = any(rng);
      } while (cp >= 0xD800 && cp <= 0xDFFF);
    }
    thoth::utf8::append(out, cp);
  }
  return out;
}

/// Random English-looking prose: words from a fixed vocabulary with commas
/// and sentence ends.
inline std::string random_prose(std::mt19937_64& rng, std::size_t words) {
  static const char* const kWords[] = {
      "the", "cat", "reading", "about", "incomprehensibilities", "river", "quietly",
      "hagiography", "running", "a", "determination", "boats", "I", "understanding",
      "water", "lugubrious", "town", "42", "well-known", "don't", "extraordinary", "go",
  };
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kWords) - 1);
  std::uniform_int_distribution<int> mark(0, 9);
  std::string out;
  bool start = true;
  for (std::size_t i = 0; i < words; ++i) {
    std::string w = kWords[pick(rng)];
    if (start && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
    if (!out.empty()) out += ' ';
    out += w;
    start = false;
    const int m = mark(rng);
    if (m == 0) {
      out += ',';
    } else if (m == 1 || i + 1 == words) {
      out += '.';
      start = true;
    }
  }
  return out;
}

/// Structural equality with a relative tolerance on numbers. Returns the
/// JSON pointer of the first mismatch, or an empty string.
inline std::string json_mismatch(const thoth::Json& got, const thoth::Json& want, double tol,
                                 const std::string& where = "") {
  if (want.is_number() && got.is_number()) {
    const double a = got.get<double>();
    const double b = want.get<double>();
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale ? "" : where.empty() ? "/" : where;
  }
  if (want.type() != got.type()) return where.empty() ? "/" : where;
  if (want.is_object()) {
    if (want.size() != got.size()) return where + "/{size}";
    for (const auto& [k, v] : want.items()) {
      if (!got.contains(k)) return where + "/" + k;
      auto m = json_mismatch(got.at(k), v, tol, where + "/" + k);
      if (!m.empty()) return m;
    }
    return "";
  }
  if (want.is_array()) {
    if (want.size() != got.size()) return where + "/[size]";
    for (std::size_t i = 0; i < want.size(); ++i) {
      auto m = json_mismatch(got[i], want[i], tol, where + "/" + std::to_string(i));
      if (!m.empty()) return m;
    }
    return "";
  }
  return got == want ? "" : (where.empty() ? "/" : where);
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string pattern = (std::filesystem::temp_directory_path() / "thoth_XXXXXX").string();
    if (!::mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace test_support
