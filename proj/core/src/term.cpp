#include "termgraph/term.hpp"

#include <algorithm>
#include <unordered_set>

#include "termgraph/error.hpp"

namespace termgraph {

bool WordsLess::operator()(std::span<const std::string> a, std::span<const std::string> b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

TermInventory TermInventory::from_terms(std::vector<Term> terms) {
  TermInventory inv;
  inv.terms_ = std::move(terms);
  for (std::size_t i = 0; i < inv.terms_.size(); ++i) {
    const Term& t = inv.terms_[i];
    if (t.id.index() != i) {
      throw Error(Errc::invalid_argument, "term ids must be dense and in order");
    }
    if (t.words.empty() || t.head_index != t.words.size() - 1) {
      throw Error(Errc::invalid_argument, "term " + std::to_string(i) + " has a bad head index");
    }
    if (i > 0 && !WordsLess{}(inv.terms_[i - 1].words, t.words)) {
      throw Error(Errc::invalid_argument, "term word sequences must be sorted and distinct");
    }
    inv.by_words_.emplace(t.words, t.id);
    std::unordered_set<std::string_view> seen;
    for (const auto& w : t.words) {
      if (seen.insert(w).second) inv.by_word_[w].push_back(t.id);
    }
  }
  return inv;
}

const Term& TermInventory::at(TermId id) const {
  if (!contains(id)) {
    throw Error(Errc::unknown_term, "unknown term id " + std::to_string(id.value));
  }
  return terms_[id.index()];
}

std::optional<TermId> TermInventory::find(std::span<const std::string> words) const {
  auto it = by_words_.find(words);
  if (it == by_words_.end()) return std::nullopt;
  return it->second;
}

std::span<const TermId> TermInventory::containing(std::string_view word) const {
  auto it = by_word_.find(std::string(word));
  if (it == by_word_.end()) return {};
  return it->second;
}

TermInventory intern(std::span<const NounPhraseSpan> spans) {
  struct Group {
    std::set<std::string> surfaces;
    std::uint64_t occurrences = 0;
    std::set<std::string_view> docs;
  };
  std::map<Words, Group, WordsLess> groups;
  for (const auto& span : spans) {
    auto& g = groups[span.words];
    g.surfaces.insert(span.surface);
    ++g.occurrences;
    g.docs.insert(span.doc_id);
  }
  std::vector<Term> terms;
  terms.reserve(groups.size());
  for (auto& [words, g] : groups) {
    Term t;
    t.id = TermId{static_cast<std::uint32_t>(terms.size())};
    t.words = words;
    t.head_index = words.size() - 1;
    t.surfaces = std::move(g.surfaces);
    t.freq_occurrences = g.occurrences;
    t.freq_docs = g.docs.size();
    terms.push_back(std::move(t));
  }
  return TermInventory::from_terms(std::move(terms));
}

std::set<std::string> uniterms(const Term& term) {
  return {term.words.begin(), term.words.end()};
}

}  // namespace termgraph
