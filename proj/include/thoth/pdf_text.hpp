#pragma once

#include <string>
#include <string_view>

#include "thoth/error.hpp"

namespace thoth {

enum class PdfFailure { Corrupt, Encrypted, NoTextLayer, Unsupported };

/// Reason code as used in error payloads: "corrupt", "encrypted",
/// "no_text_layer", "unsupported".
std::string_view to_string(PdfFailure reason);

class PdfExtractionError : public Error {
 public:
  PdfExtractionError(PdfFailure reason, const std::string& detail)
      : Error(ErrorCode::Extraction,
              "PDF extraction failed (" + std::string(to_string(reason)) + "): " + detail),
        reason_(reason) {}

  PdfFailure reason() const noexcept { return reason_; }

 private:
  PdfFailure reason_;
};

/// Text-layer extraction behind a stable interface. Implementations return
/// text in reading order with paragraphs separated by a blank line, or throw
/// PdfExtractionError.
class PdfTextAdapter {
 public:
  virtual ~PdfTextAdapter() = default;
  virtual std::string extract(std::string_view pdf_bytes) const = 0;
};

/// Self-contained extractor for PDFs with a text layer: classic and
/// compressed object streams, Flate/ASCII85/ASCIIHex filters, simple fonts
/// (WinAnsi, /Differences) and ToUnicode CMaps. No OCR and no layout
/// analysis beyond line and paragraph breaks.
class BuiltinPdfTextAdapter final : public PdfTextAdapter {
 public:
  std::string extract(std::string_view pdf_bytes) const override;
};

const PdfTextAdapter& default_pdf_adapter();

bool looks_like_pdf(std::string_view bytes);

std::string extract_pdf_text(std::string_view pdf_bytes);

}  // namespace thoth
