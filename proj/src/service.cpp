#include "thoth/service.hpp"

#include <httplib.h>

#include <charconv>
#include <cstdlib>

#include "thoth/chars.hpp"
#include "thoth/error.hpp"
#include "thoth/json_codec.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

ApiResponse reply(int status, const Json& body) { return {status, to_body(body)}; }

ApiResponse fail(int status, std::string_view code, std::string_view message) {
  return reply(status, error_to_json(code, message));
}

ApiResponse from_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Encoding: return fail(400, "invalid_encoding", e.what());
    case ErrorCode::InsufficientText: return fail(422, "insufficient_text", e.what());
    case ErrorCode::Validation: return fail(422, "invalid_profile", e.what());
    case ErrorCode::NotFound: return fail(404, "not_found", e.what());
    case ErrorCode::Extraction: return fail(422, "extraction_failed", e.what());
    case ErrorCode::Argument:
    case ErrorCode::Load: break;
  }
  return fail(500, "internal", e.what());
}

bool is_blank(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    if (!chars::is_space(d.cp)) return false;
    pos += d.length;
  }
  return true;
}

// Parses the body as a JSON object or produces the 400 response.
std::optional<Json> parse_object(std::string_view body, ApiResponse& error) {
  Json j = Json::parse(body.begin(), body.end(), nullptr, false);
  if (j.is_discarded()) {
    error = fail(400, "invalid_json", "request body is not valid JSON");
    return std::nullopt;
  }
  if (!j.is_object()) {
    error = fail(400, "invalid_json", "request body must be a JSON object");
    return std::nullopt;
  }
  return j;
}

bool present(const Json& j, const char* key) { return j.contains(key) && !j.at(key).is_null(); }

std::string lower_ascii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::size_t out = 0;
  const std::string_view s(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || out == 0) {
    throw Error(ErrorCode::Validation, std::string(name) + " must be a positive integer");
  }
  return out;
}

}  // namespace

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig c;
  if (const char* v = std::getenv("THOTH_DATA_DIR"); v && *v) c.data_dir = v;
  c.max_text_bytes = env_size("THOTH_MAX_TEXT_BYTES", c.max_text_bytes);
  c.max_pdf_bytes = env_size("THOTH_MAX_PDF_BYTES", c.max_pdf_bytes);
  if (const char* v = std::getenv("THOTH_ALLOWED_ORIGIN"); v && *v) c.allowed_origin = v;
  const std::size_t port = env_size("THOTH_PORT", static_cast<std::size_t>(c.port));
  if (port > 65535) throw Error(ErrorCode::Validation, "THOTH_PORT must be in [1, 65535]");
  c.port = static_cast<int>(port);
  return c;
}

Service::Service(ServiceConfig config, const Resources& resources, const PdfTextAdapter& pdf)
    : config_(std::move(config)), resources_(resources), pdf_(pdf), store_(config_.data_dir) {}

ApiResponse Service::analyze(std::string_view request_body) const {
  try {
    ApiResponse error;
    auto req = parse_object(request_body, error);
    if (!req) return error;
    if (!req->contains("text") || !req->at("text").is_string()) {
      return fail(400, "missing_text", "\"text\" must be a string");
    }
    const std::string& text = req->at("text").get_ref<const std::string&>();
    if (text.size() > config_.max_text_bytes) {
      return fail(413, "payload_too_large",
                  "text exceeds " + std::to_string(config_.max_text_bytes) + " bytes");
    }
    if (is_blank(text)) return fail(400, "empty_text", "\"text\" is empty");
    LexiconName lexicon = LexiconName::DaleChall;
    if (present(*req, "lexicon")) {
      const Json& v = req->at("lexicon");
      auto name = v.is_string() ? parse_lexicon_name(v.get<std::string>()) : std::nullopt;
      if (!name) {
        return fail(422, "unknown_lexicon", "lexicon must be one of dale-chall, spache, top1000");
      }
      lexicon = *name;
    }
    return reply(200, report_to_json(thoth::analyze(text, resources_, lexicon).report));
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return fail(500, "internal", e.what());
  }
}

ApiResponse Service::schedule(std::string_view request_body) const {
  try {
    ApiResponse error;
    auto req = parse_object(request_body, error);
    if (!req) return error;
    const bool has_text = present(*req, "text");
    const bool has_id = present(*req, "document_id");
    if (has_text == has_id) {
      return fail(400, "invalid_source", "provide exactly one of \"text\" or \"document_id\"");
    }
    const ReaderProfile profile =
        profile_from_json(req->contains("profile") ? req->at("profile") : Json(nullptr));

    std::string text;
    if (has_text) {
      if (!req->at("text").is_string()) return fail(400, "missing_text", "\"text\" must be a string");
      text = req->at("text").get<std::string>();
      if (text.size() > config_.max_text_bytes) {
        return fail(413, "payload_too_large",
                    "text exceeds " + std::to_string(config_.max_text_bytes) + " bytes");
      }
      if (is_blank(text)) return fail(400, "empty_text", "\"text\" is empty");
    } else {
      const Json& id = req->at("document_id");
      auto doc = id.is_string() ? store_.get(id.get<std::string>()) : std::nullopt;
      if (!doc) return fail(404, "not_found", "no document with that id");
      text = std::move(doc->text);
    }
    return reply(200, schedule_to_json(schedule_text(text, profile, resources_)));
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return fail(500, "internal", e.what());
  }
}

ApiResponse Service::upload(const std::optional<Upload>& file) {
  try {
    if (!file) return fail(400, "missing_file", "multipart field \"file\" is required");
    const std::string type = lower_ascii(file->content_type.substr(0, file->content_type.find(';')));
    const std::string name = lower_ascii(file->filename);
    const bool pdf = type == "application/pdf" || ends_with(name, ".pdf") ||
                     file->bytes.starts_with("%PDF-");

    std::string text;
    if (pdf) {
      if (file->bytes.size() > config_.max_pdf_bytes) {
        return fail(413, "payload_too_large",
                    "PDF exceeds " + std::to_string(config_.max_pdf_bytes) + " bytes");
      }
      try {
        text = pdf_.extract(file->bytes);
      } catch (const PdfExtractionError& e) {
        return fail(422, "pdf_" + std::string(to_string(e.reason())), e.what());
      }
    } else {
      const bool texty = type.empty() || type.starts_with("text/") ||
                         type == "application/octet-stream";
      if (!texty || utf8::first_invalid(file->bytes) ||
          file->bytes.find('\0') != std::string::npos) {
        return fail(415, "unsupported_media_type", "upload must be UTF-8 text or a PDF");
      }
      if (file->bytes.size() > config_.max_text_bytes) {
        return fail(413, "payload_too_large",
                    "text exceeds " + std::to_string(config_.max_text_bytes) + " bytes");
      }
      text = file->bytes;
      if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
    }
    if (is_blank(text)) return fail(422, "insufficient_text", "document contains no text");

    const std::size_t chars = utf8::length(text);
    auto put = store_.put(std::move(text), file->filename, pdf ? MediaType::Pdf : MediaType::Text);
    return reply(put.created ? 201 : 200,
                 Json{{"id", put.document.id},
                      {"media_type", std::string(to_string(put.document.media_type))},
                      {"char_count", chars}});
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return fail(500, "internal", e.what());
  }
}

ApiResponse Service::get_document(std::string_view id) const {
  try {
    auto doc = store_.get(id);
    if (!doc) return fail(404, "not_found", "no document with that id");
    return reply(200, Json{
                          {"id", doc->id},
                          {"original_filename", doc->original_filename},
                          {"media_type", std::string(to_string(doc->media_type))},
                          {"text", doc->text},
                          {"created_at", doc->created_at},
                      });
  } catch (const std::exception& e) {
    return fail(500, "internal", e.what());
  }
}

ApiResponse Service::gradient(const std::optional<std::string>& document_id,
                              const std::optional<std::string>& width) const {
  try {
    if (!document_id || document_id->empty()) {
      return fail(400, "missing_document_id", "query parameter document_id is required");
    }
    GradientConfig config;
    if (width) {
      int w = 0;
      auto [ptr, ec] = std::from_chars(width->data(), width->data() + width->size(), w);
      if (ec != std::errc{} || ptr != width->data() + width->size()) {
        return fail(422, "invalid_width", "width must be an integer in [20, 120]");
      }
      config.line_width_cpl = w;
    }
    if (config.line_width_cpl < kMinLineWidth || config.line_width_cpl > kMaxLineWidth) {
      return fail(422, "invalid_width", "width must be an integer in [20, 120]");
    }
    auto doc = store_.get(*document_id);
    if (!doc) return fail(404, "not_found", "no document with that id");
    const Json body = gradient_to_json(tokenize(doc->text), config);
    Json out{{"document_id", doc->id}};
    out.update(body);
    return reply(200, out);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return fail(500, "internal", e.what());
  }
}

void Service::mount(httplib::Server& server) {
  server.set_payload_max_length(std::max(config_.max_pdf_bytes, config_.max_text_bytes * 6) +
                                (1u << 20));
  // Plain SO_REUSEADDR: binding an occupied port must fail.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });

  const std::string origin = config_.allowed_origin;
  server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    if (origin != "*") res.set_header("Vary", "Origin");
  });

  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };

  server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.Post("/api/v1/analyze", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, analyze(req.body));
  });
  server.Post("/api/v1/schedule", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, schedule(req.body));
  });
  server.Post("/api/v1/documents",
              [this, send](const httplib::Request& req, httplib::Response& res) {
                if (!req.is_multipart_form_data()) {
                  send(res, fail(415, "unsupported_media_type",
                                 "expected multipart/form-data with a \"file\" field"));
                  return;
                }
                std::optional<Upload> file;
                if (req.has_file("file")) {
                  const auto f = req.get_file_value("file");
                  file = Upload{f.filename, f.content_type, f.content};
                }
                send(res, upload(file));
              });
  server.Get(R"(/api/v1/documents/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, get_document(req.matches[1].str()));
             });
  server.Get("/api/v1/gradient", [this, send](const httplib::Request& req, httplib::Response& res) {
    auto param = [&](const char* key) -> std::optional<std::string> {
      if (!req.has_param(key)) return std::nullopt;
      return req.get_param_value(key);
    };
    send(res, gradient(param("document_id"), param("width")));
  });

  server.set_error_handler([send](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      send(res, fail(404, "not_found", "no such endpoint"));
    } else if (res.status == 413) {
      send(res, fail(413, "payload_too_large", "request body too large"));
    } else {
      send(res, fail(res.status, "http_error", httplib::status_message(res.status)));
    }
  });
  server.set_exception_handler(
      [send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        send(res, fail(500, "internal", message));
      });
}

}  // namespace thoth
