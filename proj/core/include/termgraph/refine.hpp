#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termgraph/ids.hpp"
#include "termgraph/network.hpp"
#include "termgraph/variation.hpp"

namespace termgraph {

enum class QueryMode { exact, variants, lr_expand, chain, uniterm_combine, automatic };

std::string_view to_string(QueryMode mode) noexcept;
std::optional<QueryMode> parse_query_mode(std::string_view name) noexcept;

inline constexpr int kMaxChainDepth = 5;

struct Query {
  std::string raw;
  Words words;
  QueryMode mode = QueryMode::automatic;
  int k = 2;

  // Normalizes `raw` the same way terms are indexed. Throws
  // Error(invalid_argument) for an out-of-range k and
  // Error(empty_after_normalization) for a blank query.
  static Query make(std::string raw, QueryMode mode = QueryMode::automatic, int k = 2);
};

enum class SuggestionSource { exact, relation, combination };

struct RefinementSuggestion {
  TermId term;
  std::vector<RelationKind> relation_path;
  double score = 0.0;
  std::size_t doc_count = 0;
  ComponentId component;
  SuggestionSource source = SuggestionSource::relation;
  std::size_t added_words = 0;  // lr expansions only
  std::size_t hits = 0;         // uniterm combinations only
};

std::optional<TermId> resolve(const Query& query, const TermNetwork& net);

// COMP neighbours plus EXP_R neighbours, ranked.
std::vector<RefinementSuggestion> suggest_variants(TermId term, const TermNetwork& net);

// Terms containing `words` as a proper contiguous window, ranked. The query
// need not be an inventory term.
std::vector<RefinementSuggestion> suggest_lr_expansions(std::span<const std::string> words,
                                                        const TermNetwork& net);
// added-word count -> number of expansions.
std::map<std::size_t, std::size_t> added_word_groups(
    std::span<const RefinementSuggestion> expansions);

// Terms within k COMP edges (undirected), each with one shortest path.
// k = 0 yields only the term itself.
std::vector<RefinementSuggestion> suggest_chain(TermId term, int k, const TermNetwork& net);

// Terms containing at least `min_hits` distinct words of `uniterm_set`.
std::vector<RefinementSuggestion> suggest_uniterm_combinations(
    const std::set<std::string>& uniterm_set, const TermNetwork& net, std::size_t min_hits = 2);

// Orders by tightness class (exact, ORTH .. LR_EXP, combination), then path
// length, hit count, doc count, words. Rewrites `score` so that it is
// non-increasing along the result.
void rank_suggestions(std::vector<RefinementSuggestion>& suggestions, const TermNetwork& net);
bool ranks_before(const RefinementSuggestion& a, const RefinementSuggestion& b,
                  const TermNetwork& net);
int tightness_class(const RefinementSuggestion& s) noexcept;

// Dispatches on query.mode. AUTO: a resolved term yields itself, its variants
// and its 2-step chain; otherwise lr expansions and uniterm combinations.
// Results are deduplicated by term keeping the best-ranked entry.
std::vector<RefinementSuggestion> refine(const Query& query, const TermNetwork& net);

struct DocumentHit {
  std::string doc_id;
  std::uint32_t count = 0;
  std::map<std::string, std::string> metadata;
};

// Postings of `term` ordered by count descending, then doc_id; at most `limit`.
std::vector<DocumentHit> fetch_documents(TermId term, const TermNetwork& net, std::size_t limit);

}  // namespace termgraph
