#include "termgraph/error.hpp"

namespace termgraph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_record: return "MalformedRecord";
    case Errc::empty_corpus: return "EmptyCorpus";
    case Errc::empty_after_normalization: return "EmptyAfterNormalization";
    case Errc::malformed_lexicon_line: return "MalformedLexiconLine";
    case Errc::malformed_resource_line: return "MalformedResourceLine";
    case Errc::unknown_term: return "UnknownTerm";
    case Errc::format_version_mismatch: return "FormatVersionMismatch";
    case Errc::corrupt_payload: return "CorruptPayload";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::size_t location)
    : std::runtime_error(message), code_(code), location_(location) {}

}  // namespace termgraph
