#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace thoth {

enum class MediaType { Text, Pdf };

std::string_view to_string(MediaType type);

struct StoredDocument {
  std::string id;  // lowercase hex SHA-256 of `text`
  std::string original_filename;
  MediaType media_type = MediaType::Text;
  std::string text;
  std::string created_at;  // RFC 3339, UTC
};

std::string sha256_hex(std::string_view bytes);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Content-addressed documents on the local filesystem, one JSON file per
/// id. Creation is create-if-absent: concurrent puts of the same text
/// produce one file and every caller sees the same record.
class DocumentStore {
 public:
  explicit DocumentStore(std::filesystem::path root);

  struct PutResult {
    StoredDocument document;
    bool created = false;
  };

  /// Throws Error(Validation) for empty text.
  PutResult put(std::string text, std::string original_filename, MediaType media_type);

  std::optional<StoredDocument> get(std::string_view id) const;

  /// Exactly 64 lowercase hex digits.
  static bool is_valid_id(std::string_view id);

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path path_for(std::string_view id) const;

  std::filesystem::path root_;
  mutable std::mutex mutex_;
};

}  // namespace thoth
