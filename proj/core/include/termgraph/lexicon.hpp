#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace termgraph {

struct LexiconDiagnostic {
  std::size_t line = 0;
  std::string reason;
};

// Symmetric, irreflexive relation over normalized single words.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(std::string source_tag) : source_tag_(std::move(source_tag)) {}

  // TSV with two columns per line; blank lines and `#` comments are skipped.
  // A line without exactly two non-empty columns throws
  // Error(malformed_lexicon_line, line). Reflexive pairs, and entries that do
  // not normalize to a single word, are skipped and listed in rejected().
  static SynonymLexicon load(std::istream& in, std::string source_tag = "lexicon");

  // Adds (a,b) and (b,a). Returns false for reflexive pairs.
  bool add(std::string_view a, std::string_view b);

  bool contains(std::string_view a, std::string_view b) const;
  std::span<const std::string> synonyms_of(std::string_view word) const;

  // Number of ordered pairs, i.e. twice the number of unordered pairs.
  std::size_t pair_count() const noexcept { return pair_count_; }
  bool empty() const noexcept { return pair_count_ == 0; }
  const std::string& source_tag() const noexcept { return source_tag_; }
  const std::vector<LexiconDiagnostic>& rejected() const noexcept { return rejected_; }

 private:
  std::string source_tag_ = "lexicon";
  std::map<std::string, std::vector<std::string>, std::less<>> synonyms_;
  std::size_t pair_count_ = 0;
  std::vector<LexiconDiagnostic> rejected_;
};

}  // namespace termgraph
