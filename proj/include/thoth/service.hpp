#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "thoth/document_store.hpp"
#include "thoth/pdf_text.hpp"
#include "thoth/resources.hpp"

namespace httplib {
class Server;
}

namespace thoth {

struct ServiceConfig {
  std::filesystem::path data_dir = "data/store";
  std::size_t max_text_bytes = 2u << 20;
  std::size_t max_pdf_bytes = 20u << 20;
  std::string allowed_origin = "*";
  int port = 8080;

  /// Defaults overridden by THOTH_DATA_DIR, THOTH_MAX_TEXT_BYTES,
  /// THOTH_MAX_PDF_BYTES, THOTH_ALLOWED_ORIGIN and THOTH_PORT. Throws
  /// Error(Validation) for a malformed number.
  static ServiceConfig from_env();
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

struct Upload {
  std::string filename;
  std::string content_type;
  std::string bytes;
};

/// Request handlers for the v1 JSON API. Handlers never throw; failures are
/// {"error":{"code","message"}} bodies with the matching status.
class Service {
 public:
  Service(ServiceConfig config, const Resources& resources,
          const PdfTextAdapter& pdf = default_pdf_adapter());

  ApiResponse analyze(std::string_view request_body) const;
  ApiResponse schedule(std::string_view request_body) const;
  ApiResponse upload(const std::optional<Upload>& file);
  ApiResponse get_document(std::string_view id) const;
  ApiResponse gradient(const std::optional<std::string>& document_id,
                       const std::optional<std::string>& width) const;

  /// Registers the routes, CORS headers and JSON error pages.
  void mount(httplib::Server& server);

  const ServiceConfig& config() const { return config_; }
  DocumentStore& store() { return store_; }

 private:
  ServiceConfig config_;
  const Resources& resources_;
  const PdfTextAdapter& pdf_;
  DocumentStore store_;
};

}  // namespace thoth
