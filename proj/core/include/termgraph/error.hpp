#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace termgraph {

enum class Errc {
  malformed_record,
  empty_corpus,
  empty_after_normalization,
  malformed_lexicon_line,
  malformed_resource_line,
  unknown_term,
  format_version_mismatch,
  corrupt_payload,
  unsupported_format,
  invalid_argument,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// `location` is a 1-based line number for text inputs, a byte offset for
// network payloads, and 0 when it does not apply.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::size_t location = 0);

  Errc code() const noexcept { return code_; }
  std::size_t location() const noexcept { return location_; }

 private:
  Errc code_;
  std::size_t location_;
};

}  // namespace termgraph
