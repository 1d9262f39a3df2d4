#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termgraph/corpus.hpp"
#include "termgraph/ids.hpp"

namespace termgraph {

struct Term {
  TermId id;
  Words words;
  // English compounds are right-headed: always words.size() - 1.
  std::size_t head_index = 0;
  std::set<std::string> surfaces;
  std::uint64_t freq_occurrences = 0;
  std::uint64_t freq_docs = 0;

  const std::string& head() const { return words[head_index]; }
  std::size_t length() const noexcept { return words.size(); }

  friend bool operator==(const Term&, const Term&) = default;
};

// Lexicographic order on word sequences, usable with spans for lookups.
struct WordsLess {
  using is_transparent = void;
  bool operator()(std::span<const std::string> a, std::span<const std::string> b) const;
  bool operator()(const Words& a, const Words& b) const {
    return (*this)(std::span<const std::string>(a), std::span<const std::string>(b));
  }
  bool operator()(const Words& a, std::span<const std::string> b) const {
    return (*this)(std::span<const std::string>(a), b);
  }
  bool operator()(std::span<const std::string> a, const Words& b) const {
    return (*this)(a, std::span<const std::string>(b));
  }
};

class TermInventory {
 public:
  TermInventory() = default;

  // Takes terms whose ids are 0..n-1 in lexicographic word order and builds
  // the lookup indexes. Throws Error(invalid_argument) if that does not hold.
  static TermInventory from_terms(std::vector<Term> terms);

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool contains(TermId id) const noexcept { return id.index() < terms_.size(); }
  const Term& at(TermId id) const;
  std::span<const Term> terms() const noexcept { return terms_; }

  std::optional<TermId> find(std::span<const std::string> words) const;
  // Terms that contain `word` anywhere, ascending by id.
  std::span<const TermId> containing(std::string_view word) const;

  friend bool operator==(const TermInventory& a, const TermInventory& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
  std::map<Words, TermId, WordsLess> by_words_;
  std::unordered_map<std::string, std::vector<TermId>> by_word_;
};

// One term per distinct word sequence, ids assigned in lexicographic order.
TermInventory intern(std::span<const NounPhraseSpan> spans);

std::set<std::string> uniterms(const Term& term);

}  // namespace termgraph
