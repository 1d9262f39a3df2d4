#include "termgraph/refine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

struct ModeName {
  QueryMode mode;
  std::string_view name;
};

constexpr ModeName kModeNames[] = {
    {QueryMode::exact, "exact"},         {QueryMode::variants, "variants"},
    {QueryMode::lr_expand, "lr_expand"}, {QueryMode::chain, "chain"},
    {QueryMode::uniterm_combine, "uniterm_combine"}, {QueryMode::automatic, "auto"},
};

constexpr int kCombinationClass = 7;

RefinementSuggestion make_suggestion(TermId id, std::vector<RelationKind> path,
                                     SuggestionSource source, const TermNetwork& net) {
  RefinementSuggestion s;
  s.term = id;
  s.relation_path = std::move(path);
  s.source = source;
  s.doc_count = net.postings(id).size();
  s.component = net.component_of(id).id;
  return s;
}

double score_of(const RefinementSuggestion& s) {
  const int cls = tightness_class(s);
  if (cls == kCombinationClass) return 0.5 + 0.05 * static_cast<double>(std::min<std::size_t>(s.hits, 9));
  const auto len = std::min<std::size_t>(s.relation_path.size(), kMaxChainDepth);
  return 8.0 - cls - 0.1 * static_cast<double>(len);
}

void check_depth(int k) {
  if (k < 0 || k > kMaxChainDepth) {
    throw Error(Errc::invalid_argument,
                "chain depth must be within 0.." + std::to_string(kMaxChainDepth));
  }
}

std::vector<RefinementSuggestion> dedupe_best(std::vector<RefinementSuggestion> all,
                                              const TermNetwork& net) {
  rank_suggestions(all, net);
  std::unordered_set<TermId> seen;
  std::vector<RefinementSuggestion> out;
  for (auto& s : all) {
    if (seen.insert(s.term).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string_view to_string(QueryMode mode) noexcept {
  for (const auto& m : kModeNames) {
    if (m.mode == mode) return m.name;
  }
  return "auto";
}

std::optional<QueryMode> parse_query_mode(std::string_view name) noexcept {
  const std::string lowered = fold_case(name);
  for (const auto& m : kModeNames) {
    if (m.name == lowered) return m.mode;
  }
  return std::nullopt;
}

Query Query::make(std::string raw, QueryMode mode, int k) {
  check_depth(k);
  Query q;
  q.words = normalize_text(raw);
  q.raw = std::move(raw);
  q.mode = mode;
  q.k = k;
  return q;
}

std::optional<TermId> resolve(const Query& query, const TermNetwork& net) {
  return net.inventory().find(query.words);
}

int tightness_class(const RefinementSuggestion& s) noexcept {
  switch (s.source) {
    case SuggestionSource::exact:
      return 0;
    case SuggestionSource::combination:
      return kCombinationClass;
    case SuggestionSource::relation:
      break;
  }
  int loosest = 0;
  for (auto kind : s.relation_path) loosest = std::max(loosest, static_cast<int>(kind));
  return 1 + loosest;
}

bool ranks_before(const RefinementSuggestion& a, const RefinementSuggestion& b,
                  const TermNetwork& net) {
  if (int ca = tightness_class(a), cb = tightness_class(b); ca != cb) return ca < cb;
  if (a.relation_path.size() != b.relation_path.size()) {
    return a.relation_path.size() < b.relation_path.size();
  }
  if (a.hits != b.hits) return a.hits > b.hits;
  if (a.doc_count != b.doc_count) return a.doc_count > b.doc_count;
  const auto& wa = net.term(a.term).words;
  const auto& wb = net.term(b.term).words;
  if (wa != wb) return WordsLess{}(wa, wb);
  return a.term < b.term;
}

void rank_suggestions(std::vector<RefinementSuggestion>& suggestions, const TermNetwork& net) {
  for (auto& s : suggestions) s.score = score_of(s);
  std::stable_sort(suggestions.begin(), suggestions.end(),
                   [&](const auto& a, const auto& b) { return ranks_before(a, b, net); });
}

std::vector<RefinementSuggestion> suggest_variants(TermId term, const TermNetwork& net) {
  std::vector<RefinementSuggestion> out;
  for (const auto& n : net.comp_neighbors(term)) {
    out.push_back(make_suggestion(n.term, {n.kind}, SuggestionSource::relation, net));
  }
  for (const auto& n : net.exp_r_neighbors(term)) {
    out.push_back(make_suggestion(n.term, {n.kind}, SuggestionSource::relation, net));
  }
  rank_suggestions(out, net);
  return out;
}

std::vector<RefinementSuggestion> suggest_lr_expansions(std::span<const std::string> words,
                                                        const TermNetwork& net) {
  std::vector<RefinementSuggestion> out;
  if (words.empty()) return out;
  const auto& inv = net.inventory();
  // scan the terms of the rarest query word
  std::span<const TermId> candidates = inv.containing(words.front());
  for (const auto& w : words) {
    auto c = inv.containing(w);
    if (c.size() < candidates.size()) candidates = c;
  }
  for (TermId id : candidates) {
    const Term& t = inv.at(id);
    if (auto kind = classify_window(words, t.words)) {
      auto s = make_suggestion(id, {*kind}, SuggestionSource::relation, net);
      s.added_words = t.length() - words.size();
      out.push_back(std::move(s));
    }
  }
  rank_suggestions(out, net);
  return out;
}

std::map<std::size_t, std::size_t> added_word_groups(
    std::span<const RefinementSuggestion> expansions) {
  std::map<std::size_t, std::size_t> groups;
  for (const auto& s : expansions) ++groups[s.added_words];
  return groups;
}

std::vector<RefinementSuggestion> suggest_chain(TermId term, int k, const TermNetwork& net) {
  check_depth(k);
  net.term(term);
  struct Visit {
    TermId parent;
    RelationKind via;
    int depth;
  };
  std::unordered_map<TermId, Visit> visited;
  std::vector<TermId> order{term};
  visited.emplace(term, Visit{term, RelationKind::orth, 0});
  std::deque<TermId> queue{term};
  while (!queue.empty()) {
    const TermId cur = queue.front();
    queue.pop_front();
    const int depth = visited.at(cur).depth;
    if (depth == k) continue;
    for (const auto& n : net.comp_neighbors(cur)) {
      if (visited.emplace(n.term, Visit{cur, n.kind, depth + 1}).second) {
        order.push_back(n.term);
        queue.push_back(n.term);
      }
    }
  }
  std::vector<RefinementSuggestion> out;
  for (TermId id : order) {
    std::vector<RelationKind> path;
    for (TermId at = id; at != term;) {
      const auto& v = visited.at(at);
      path.push_back(v.via);
      at = v.parent;
    }
    std::reverse(path.begin(), path.end());
    out.push_back(make_suggestion(
        id, std::move(path), id == term ? SuggestionSource::exact : SuggestionSource::relation, net));
  }
  rank_suggestions(out, net);
  return out;
}

std::vector<RefinementSuggestion> suggest_uniterm_combinations(
    const std::set<std::string>& uniterm_set, const TermNetwork& net, std::size_t min_hits) {
  if (min_hits < 2) throw Error(Errc::invalid_argument, "min_hits must be at least 2");
  std::map<TermId, std::size_t> hits;
  for (const auto& word : uniterm_set) {
    for (TermId id : net.inventory().containing(word)) ++hits[id];
  }
  std::vector<RefinementSuggestion> out;
  for (const auto& [id, count] : hits) {
    if (count < min_hits) continue;
    auto s = make_suggestion(id, {}, SuggestionSource::combination, net);
    s.hits = count;
    out.push_back(std::move(s));
  }
  rank_suggestions(out, net);
  return out;
}

std::vector<RefinementSuggestion> refine(const Query& query, const TermNetwork& net) {
  check_depth(query.k);
  const auto resolved = resolve(query, net);
  switch (query.mode) {
    case QueryMode::exact:
      if (!resolved) return {};
      return {make_suggestion(*resolved, {}, SuggestionSource::exact, net)};
    case QueryMode::variants:
      return resolved ? suggest_variants(*resolved, net) : std::vector<RefinementSuggestion>{};
    case QueryMode::lr_expand:
      return suggest_lr_expansions(query.words, net);
    case QueryMode::chain:
      return resolved ? suggest_chain(*resolved, query.k, net) : std::vector<RefinementSuggestion>{};
    case QueryMode::uniterm_combine:
      return suggest_uniterm_combinations({query.words.begin(), query.words.end()}, net);
    case QueryMode::automatic:
      break;
  }
  std::vector<RefinementSuggestion> all;
  auto append = [&all](std::vector<RefinementSuggestion> part) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  if (resolved) {
    append({make_suggestion(*resolved, {}, SuggestionSource::exact, net)});
    append(suggest_variants(*resolved, net));
    append(suggest_chain(*resolved, 2, net));
  } else {
    append(suggest_lr_expansions(query.words, net));
    append(suggest_uniterm_combinations({query.words.begin(), query.words.end()}, net));
  }
  return dedupe_best(std::move(all), net);
}

std::vector<DocumentHit> fetch_documents(TermId term, const TermNetwork& net, std::size_t limit) {
  std::vector<DocumentHit> hits;
  for (const auto& p : net.postings(term)) {
    DocumentHit h{p.doc_id, p.count, {}};
    if (const auto* info = net.find_document(p.doc_id)) h.metadata = info->metadata;
    hits.push_back(std::move(h));
  }
  std::sort(hits.begin(), hits.end(), [](const DocumentHit& a, const DocumentHit& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.doc_id < b.doc_id;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

}  // namespace termgraph
