#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termgraph/ids.hpp"
#include "termgraph/lexicon.hpp"
#include "termgraph/term.hpp"

namespace termgraph {

// Declaration order is the tightness order used for ranking.
enum class RelationKind : std::uint8_t { orth, sub_syn, ins, exp_l, exp_r, lr_exp };

inline constexpr std::array<RelationKind, 6> kAllRelationKinds = {
    RelationKind::orth,  RelationKind::sub_syn, RelationKind::ins,
    RelationKind::exp_l, RelationKind::exp_r,   RelationKind::lr_exp};

// The COMP subset used for clustering.
constexpr bool in_comp(RelationKind kind) noexcept {
  return kind == RelationKind::orth || kind == RelationKind::sub_syn ||
         kind == RelationKind::ins || kind == RelationKind::exp_l;
}

constexpr bool is_symmetric(RelationKind kind) noexcept {
  return kind == RelationKind::orth || kind == RelationKind::sub_syn;
}

std::string_view to_string(RelationKind kind) noexcept;
std::optional<RelationKind> parse_relation_kind(std::string_view tag) noexcept;

// Symmetric kinds are stored with a < b; expansion kinds point short -> long.
struct VariationEdge {
  RelationKind kind = RelationKind::orth;
  TermId a;
  TermId b;

  friend auto operator<=>(const VariationEdge&, const VariationEdge&) = default;
};

using WordSpan = std::span<const std::string>;

// Raw (pre-interning) sequences that collapse to the same normalized term.
bool detect_orth(WordSpan raw_a, WordSpan raw_b);
// Same normalized words, different observed surfaces. Distinct interned
// terms never satisfy this; their orthographic variants were merged.
bool detect_orth(const Term& a, const Term& b);

// `shorter` is a proper contiguous suffix of `longer`.
bool detect_exp_l(WordSpan shorter, WordSpan longer);
// `shorter` is a proper contiguous prefix of `longer` and not also a suffix
// (the head moves right).
bool detect_exp_r(WordSpan shorter, WordSpan longer);
// Same first and last word, `shorter` a subsequence of `longer`, and neither
// a prefix nor a suffix of it.
bool detect_ins(WordSpan shorter, WordSpan longer);
// Same length, exactly one differing position, and that pair is in `lex`.
bool detect_sub_syn(WordSpan a, WordSpan b, const SynonymLexicon& lex);
// `inner` occurs as a contiguous word window of a strictly longer `outer`.
bool detect_lr_exp(WordSpan inner, WordSpan outer);

inline bool detect_exp_l(const Term& s, const Term& l) { return detect_exp_l(s.words, l.words); }
inline bool detect_exp_r(const Term& s, const Term& l) { return detect_exp_r(s.words, l.words); }
inline bool detect_ins(const Term& s, const Term& l) { return detect_ins(s.words, l.words); }
inline bool detect_lr_exp(const Term& i, const Term& o) { return detect_lr_exp(i.words, o.words); }
inline bool detect_sub_syn(const Term& a, const Term& b, const SynonymLexicon& lex) {
  return detect_sub_syn(a.words, b.words, lex);
}

// The tightest expansion kind relating a contained window to its container:
// EXP_L for a suffix, EXP_R for a prefix, LR_EXP for an inner window.
// Empty when `inner` is not a proper window of `outer`.
std::optional<RelationKind> classify_window(WordSpan inner, WordSpan outer);

// Every SUB_SYN, INS, EXP_L, EXP_R and LR_EXP edge between inventory terms,
// sorted by (kind, a, b). Candidates come from word-window, endpoint and
// synonym indexes; the result equals the all-pairs detector sweep.
std::vector<VariationEdge> find_all_edges(const TermInventory& inv, const SynonymLexicon& lex);

}  // namespace termgraph
