#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace termgraph {

using Words = std::vector<std::string>;

// Coarse, closed part-of-speech set. Fine-grained tagsets are mapped onto it
// at ingest time through a TagMap.
enum class Pos : std::uint8_t { noun, propn, adj, verb_ing, det, prep, conj, num, other };

std::string_view to_string(Pos pos) noexcept;
std::optional<Pos> parse_coarse_pos(std::string_view name) noexcept;

struct TaggedToken {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::other;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct Document {
  std::string doc_id;
  std::vector<TaggedToken> tokens;
  // Index of the first token of every input sentence line, ascending.
  std::vector<std::size_t> sentence_starts;
  std::map<std::string, std::string> metadata;

  std::size_t sentence_count() const noexcept { return sentence_starts.size(); }
  // Half-open token range [first, second) of sentence `i`.
  std::pair<std::size_t, std::size_t> sentence_range(std::size_t i) const;
  std::size_t sentence_of(std::size_t token_index) const;

  friend bool operator==(const Document&, const Document&) = default;
};

struct NounPhraseSpan {
  std::string doc_id;
  std::size_t start = 0;  // token index, includes a leading determiner
  std::size_t end = 0;    // exclusive
  Words words;            // normalized lemmas, determiner and "of" dropped
  std::string surface;    // original text without the leading determiner
  bool complex = false;

  friend bool operator==(const NounPhraseSpan&, const NounPhraseSpan&) = default;
};

class TagMap {
 public:
  // Identity on the coarse tag names plus the Penn Treebank tagset.
  static TagMap builtin();
  // TSV `input_tag<TAB>coarse_tag`; `#` starts a comment line. The coarse
  // tag names always map to themselves.
  static TagMap load(std::istream& in);

  std::optional<Pos> lookup(std::string_view tag) const;
  void set(std::string tag, Pos pos);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::unordered_map<std::string, Pos> entries_;
};

struct ParseLimits {
  std::size_t max_documents = 10'000'000;
  std::size_t max_tokens_per_document = 1'000'000;
  std::size_t max_line_bytes = 1 << 20;
};

// Parses the block format:
//   #DOC <doc_id>
//   #META <key>=<value>        (optional, repeatable)
//   surface/TAG[/lemma] ...    (one sentence per line)
// with blocks separated by blank lines. Throws Error(malformed_record, line)
// on bad syntax and Error(empty_corpus) when no document is found.
std::vector<Document> parse_corpus(std::istream& in, const TagMap& tags = TagMap::builtin(),
                                   const ParseLimits& limits = {});

// Maximal matches of  DET? (ADJ|NOUN|PROPN|VERB_ING)* (NOUN|PROPN)  inside each
// sentence. Numbers and single-character content tokens break a match.
std::vector<NounPhraseSpan> chunk_simplex(const Document& doc);

struct ComplexNpConfig {
  std::size_t max_merge = 2;
};

// Merges simplex spans linked by "of" (optionally followed by a determiner).
// Returns the input spans plus every merged span, ordered by (start, end).
std::vector<NounPhraseSpan> chunk_complex(const Document& doc,
                                          std::span<const NounPhraseSpan> spans,
                                          const ComplexNpConfig& config = {});

std::vector<NounPhraseSpan> extract_noun_phrases(const Document& doc,
                                                 const ComplexNpConfig& config = {});

}  // namespace termgraph
