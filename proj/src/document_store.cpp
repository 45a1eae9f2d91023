#include "thoth/document_store.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "thoth/error.hpp"
#include "thoth/json_codec.hpp"

namespace fs = std::filesystem;

namespace thoth {

std::string_view to_string(MediaType type) {
  return type == MediaType::Pdf ? "pdf" : "text";
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &size, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (unsigned int i = 0; i < size; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

Json to_json(const StoredDocument& d) {
  return Json{
      {"id", d.id},
      {"original_filename", d.original_filename},
      {"media_type", std::string(to_string(d.media_type))},
      {"text", d.text},
      {"created_at", d.created_at},
  };
}

std::optional<StoredDocument> read_record(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = Json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  StoredDocument d;
  d.id = j.value("id", "");
  d.original_filename = j.value("original_filename", "");
  d.media_type = j.value("media_type", "text") == "pdf" ? MediaType::Pdf : MediaType::Text;
  d.text = j.value("text", "");
  d.created_at = j.value("created_at", "");
  return d;
}

}  // namespace

DocumentStore::DocumentStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    throw Error(ErrorCode::Load, "cannot create data directory " + root_.string() + ": " +
                                     ec.message());
  }
}

bool DocumentStore::is_valid_id(std::string_view id) {
  if (id.size() != 64) return false;
  for (char c : id) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

fs::path DocumentStore::path_for(std::string_view id) const {
  return root_ / (std::string(id) + ".json");
}

DocumentStore::PutResult DocumentStore::put(std::string text, std::string original_filename,
                                            MediaType media_type) {
  if (text.empty()) throw Error(ErrorCode::Validation, "document text is empty");
  StoredDocument doc{sha256_hex(text), std::move(original_filename), media_type, std::move(text),
                     utc_timestamp()};
  const fs::path target = path_for(doc.id);

  std::lock_guard lock(mutex_);
  if (auto existing = read_record(target)) return {std::move(*existing), false};

  // Write to a private temp file, then link it into place. The link fails
  // if another process got there first, in which case theirs wins.
  static std::atomic<unsigned> counter{0};
  const fs::path tmp = root_ / (".tmp-" + doc.id.substr(0, 16) + "-" + std::to_string(::getpid()) +
                                "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << to_json(doc).dump() << '\n';
    out.close();
    if (!out) {
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw Error(ErrorCode::Load, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::create_hard_link(tmp, target, ec);
  bool created = !ec;
  if (ec && ec != std::errc::file_exists && !fs::exists(target)) {
    // Filesystems without hard links: rename is still atomic, and the
    // mutex covers this process.
    ec.clear();
    fs::rename(tmp, target, ec);
    created = !ec;
  }
  std::error_code ignore;
  fs::remove(tmp, ignore);
  if (auto stored = read_record(target)) return {std::move(*stored), created};
  throw Error(ErrorCode::Load, "cannot store document " + doc.id);
}

std::optional<StoredDocument> DocumentStore::get(std::string_view id) const {
  if (!is_valid_id(id)) return std::nullopt;
  std::lock_guard lock(mutex_);
  return read_record(path_for(id));
}

}  // namespace thoth
