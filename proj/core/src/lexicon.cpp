#include "termgraph/lexicon.hpp"

#include <algorithm>
#include <istream>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool insert_sorted(std::vector<std::string>& v, std::string_view w) {
  auto it = std::lower_bound(v.begin(), v.end(), w);
  if (it != v.end() && *it == w) return false;
  v.insert(it, std::string(w));
  return true;
}

Words entry_words(std::string_view text) {
  Words out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = std::min(text.find(' ', pos), text.size());
    for (auto& w : normalize_word(text.substr(pos, end - pos))) out.push_back(std::move(w));
    pos = end + 1;
  }
  return out;
}

}  // namespace

SynonymLexicon SynonymLexicon::load(std::istream& in, std::string source_tag) {
  SynonymLexicon lex(std::move(source_tag));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto tab = view.find('\t');
    const auto a = tab == std::string_view::npos ? std::string_view{} : trim(view.substr(0, tab));
    const auto b = tab == std::string_view::npos ? std::string_view{} : trim(view.substr(tab + 1));
    if (a.empty() || b.empty() || b.find('\t') != std::string_view::npos) {
      throw Error(Errc::malformed_lexicon_line,
                  "lexicon line " + std::to_string(line_no) + ": expected word1<TAB>word2",
                  line_no);
    }
    const Words na = entry_words(a);
    const Words nb = entry_words(b);
    if (na.size() != 1 || nb.size() != 1) {
      lex.rejected_.push_back({line_no, "entry does not normalize to a single word"});
      continue;
    }
    if (!lex.add(na.front(), nb.front())) {
      lex.rejected_.push_back({line_no, "reflexive pair"});
    }
  }
  return lex;
}

bool SynonymLexicon::add(std::string_view a, std::string_view b) {
  if (a == b) return false;
  if (insert_sorted(synonyms_[std::string(a)], b)) ++pair_count_;
  if (insert_sorted(synonyms_[std::string(b)], a)) ++pair_count_;
  return true;
}

bool SynonymLexicon::contains(std::string_view a, std::string_view b) const {
  auto it = synonyms_.find(a);
  if (it == synonyms_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), b);
}

std::span<const std::string> SynonymLexicon::synonyms_of(std::string_view word) const {
  auto it = synonyms_.find(word);
  if (it == synonyms_.end()) return {};
  return it->second;
}

}  // namespace termgraph
