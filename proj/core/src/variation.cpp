#include "termgraph/variation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

bool has_prefix(WordSpan whole, WordSpan part) {
  return part.size() <= whole.size() && std::equal(part.begin(), part.end(), whole.begin());
}

bool has_suffix(WordSpan whole, WordSpan part) {
  return part.size() <= whole.size() &&
         std::equal(part.begin(), part.end(), whole.end() - static_cast<std::ptrdiff_t>(part.size()));
}

bool is_subsequence(WordSpan whole, WordSpan part) {
  std::size_t i = 0;
  for (const auto& w : whole) {
    if (i < part.size() && part[i] == w) ++i;
  }
  return i == part.size();
}

bool contains_window(WordSpan whole, WordSpan part) {
  return std::search(whole.begin(), whole.end(), part.begin(), part.end()) != whole.end();
}

std::optional<Words> try_normalize(WordSpan raw) {
  try {
    return normalize(raw);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::orth: return "ORTH";
    case RelationKind::sub_syn: return "SUB_SYN";
    case RelationKind::ins: return "INS";
    case RelationKind::exp_l: return "EXP_L";
    case RelationKind::exp_r: return "EXP_R";
    case RelationKind::lr_exp: return "LR_EXP";
  }
  return "?";
}

std::optional<RelationKind> parse_relation_kind(std::string_view tag) noexcept {
  for (auto kind : kAllRelationKinds) {
    if (to_string(kind) == tag) return kind;
  }
  return std::nullopt;
}

bool detect_orth(WordSpan raw_a, WordSpan raw_b) {
  if (std::equal(raw_a.begin(), raw_a.end(), raw_b.begin(), raw_b.end())) return false;
  auto a = try_normalize(raw_a);
  auto b = try_normalize(raw_b);
  return a && b && *a == *b;
}

bool detect_orth(const Term& a, const Term& b) {
  return a.words == b.words && a.surfaces != b.surfaces;
}

bool detect_exp_l(WordSpan shorter, WordSpan longer) {
  return longer.size() > shorter.size() && has_suffix(longer, shorter);
}

bool detect_exp_r(WordSpan shorter, WordSpan longer) {
  return longer.size() > shorter.size() && has_prefix(longer, shorter) &&
         !has_suffix(longer, shorter);
}

bool detect_ins(WordSpan shorter, WordSpan longer) {
  if (longer.size() <= shorter.size() || shorter.empty()) return false;
  if (shorter.front() != longer.front() || shorter.back() != longer.back()) return false;
  return is_subsequence(longer, shorter) && !has_suffix(longer, shorter) &&
         !has_prefix(longer, shorter);
}

bool detect_sub_syn(WordSpan a, WordSpan b, const SynonymLexicon& lex) {
  if (a.size() != b.size()) return false;
  std::optional<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (diff) return false;
    diff = i;
  }
  return diff && lex.contains(a[*diff], b[*diff]);
}

bool detect_lr_exp(WordSpan inner, WordSpan outer) {
  return outer.size() > inner.size() && contains_window(outer, inner);
}

std::optional<RelationKind> classify_window(WordSpan inner, WordSpan outer) {
  if (outer.size() <= inner.size()) return std::nullopt;
  if (has_suffix(outer, inner)) return RelationKind::exp_l;
  if (has_prefix(outer, inner)) return RelationKind::exp_r;
  if (contains_window(outer, inner)) return RelationKind::lr_exp;
  return std::nullopt;
}

std::vector<VariationEdge> find_all_edges(const TermInventory& inv, const SynonymLexicon& lex) {
  std::vector<VariationEdge> edges;
  const auto terms = inv.terms();

  // Windows: every proper contiguous window of a term that is itself a term.
  for (const Term& outer : terms) {
    const WordSpan words = outer.words;
    std::set<TermId> inners;
    for (std::size_t start = 0; start < words.size(); ++start) {
      for (std::size_t len = 1; start + len <= words.size() && len < words.size(); ++len) {
        if (auto id = inv.find(words.subspan(start, len))) inners.insert(*id);
      }
    }
    for (TermId inner_id : inners) {
      const WordSpan inner = inv.at(inner_id).words;
      edges.push_back({RelationKind::lr_exp, inner_id, outer.id});
      if (detect_exp_l(inner, words)) edges.push_back({RelationKind::exp_l, inner_id, outer.id});
      if (detect_exp_r(inner, words)) edges.push_back({RelationKind::exp_r, inner_id, outer.id});
    }
  }

  // Insertions: candidates share both endpoints.
  std::map<std::pair<std::string_view, std::string_view>, std::vector<TermId>> by_endpoints;
  for (const Term& t : terms) {
    by_endpoints[{t.words.front(), t.words.back()}].push_back(t.id);
  }
  for (const Term& longer : terms) {
    if (longer.length() < 3) continue;
    const auto& bucket = by_endpoints[{longer.words.front(), longer.words.back()}];
    for (TermId sid : bucket) {
      const Term& shorter = inv.at(sid);
      if (shorter.length() < longer.length() && detect_ins(shorter.words, longer.words)) {
        edges.push_back({RelationKind::ins, sid, longer.id});
      }
    }
  }

  // Synonym substitution: rewrite one position through the lexicon.
  if (!lex.empty()) {
    for (const Term& t : terms) {
      Words probe = t.words;
      for (std::size_t pos = 0; pos < probe.size(); ++pos) {
        const std::string original = probe[pos];
        for (const auto& syn : lex.synonyms_of(original)) {
          probe[pos] = syn;
          if (auto other = inv.find(probe); other && t.id < *other) {
            edges.push_back({RelationKind::sub_syn, t.id, *other});
          }
        }
        probe[pos] = original;
      }
    }
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace termgraph
