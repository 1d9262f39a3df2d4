#include "termgraph/normalize.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "termgraph/error.hpp"

namespace termgraph {
namespace {

// Words ending in -s that are not plurals.
const std::unordered_set<std::string_view>& invariant_words() {
  static const std::unordered_set<std::string_view> words = {
      "series", "species", "news",  "physics", "mathematics", "economics", "statistics",
      "genetics", "diabetes", "rabies", "herpes", "lens", "gas", "bias", "this",
      "thus", "yes", "always", "perhaps", "whereas", "its", "has", "was", "does", "is",
  };
  return words;
}

const std::unordered_map<std::string_view, std::string_view>& irregular_plurals() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"data", "datum"},         {"criteria", "criterion"},   {"phenomena", "phenomenon"},
      {"children", "child"},     {"men", "man"},              {"women", "woman"},
      {"feet", "foot"},          {"teeth", "tooth"},          {"mice", "mouse"},
      {"analyses", "analysis"},  {"hypotheses", "hypothesis"}, {"theses", "thesis"},
      {"diagnoses", "diagnosis"},
  };
  return table;
}

bool ends_with_any(std::string_view w, std::initializer_list<std::string_view> suffixes) {
  return std::any_of(suffixes.begin(), suffixes.end(),
                     [w](std::string_view s) { return w.ends_with(s); });
}

// One rewrite; returns the input unchanged at a fixed point.
std::string lemma_step(std::string_view w) {
  if (invariant_words().contains(w)) return std::string(w);
  if (auto it = irregular_plurals().find(w); it != irregular_plurals().end()) {
    return std::string(it->second);
  }
  if (w.size() > 4 && w.ends_with("ies")) {
    return std::string(w.substr(0, w.size() - 3)) + "y";
  }
  if (w.size() > 4 && ends_with_any(w, {"sses", "xes", "zes", "ches", "shes"})) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.size() > 3 && w.ends_with('s') && !ends_with_any(w, {"ss", "us", "is"})) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string lemmatize(std::string_view word) {
  std::string current(word);
  for (;;) {
    std::string next = lemma_step(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Words normalize_word(std::string_view raw) {
  Words out;
  const std::string folded = fold_case(raw);
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= folded.size(); ++i) {
    if (i == folded.size() || folded[i] == '-' || folded[i] == '/') {
      if (i > begin) out.push_back(lemmatize(std::string_view(folded).substr(begin, i - begin)));
      begin = i + 1;
    }
  }
  return out;
}

Words normalize(std::span<const std::string> raw) {
  Words out;
  for (const auto& w : raw) {
    Words pieces = normalize_word(w);
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
  }
  if (out.empty()) {
    throw Error(Errc::empty_after_normalization, "no words left after normalization");
  }
  return out;
}

Words normalize_text(std::string_view text) {
  Words raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) raw.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return normalize(raw);
}

std::string join_words(std::span<const std::string> words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

}  // namespace termgraph
