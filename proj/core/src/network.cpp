#include "termgraph/network.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

TermId pick_label(std::span<const TermId> members, const std::vector<std::size_t>& degree,
                  const TermInventory& inv) {
  TermId best = members.front();
  for (TermId m : members.subspan(1)) {
    const auto dm = degree[m.index()];
    const auto db = degree[best.index()];
    if (dm > db || (dm == db && WordsLess{}(inv.at(m).words, inv.at(best).words))) best = m;
  }
  return best;
}

std::vector<std::size_t> comp_degrees(std::size_t n, std::span<const VariationEdge> edges,
                                      const std::vector<bool>* restrict_to = nullptr) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& e : edges) {
    if (!in_comp(e.kind) || e.a == e.b) continue;
    if (restrict_to && (!(*restrict_to)[e.a.index()] || !(*restrict_to)[e.b.index()])) continue;
    adj[e.a.index()].push_back(e.b.value);
    adj[e.b.index()].push_back(e.a.value);
  }
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj[i].begin(), adj[i].end());
    degree[i] = static_cast<std::size_t>(std::unique(adj[i].begin(), adj[i].end()) - adj[i].begin());
  }
  return degree;
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(Errc::invalid_argument, "inconsistent network: " + what);
}

}  // namespace

// ---------------------------------------------------------------- TermNetwork

TermNetwork::TermNetwork(TermInventory inventory, std::vector<VariationEdge> edges,
                         std::vector<Component> components,
                         std::vector<std::vector<Posting>> postings,
                         std::vector<DocumentInfo> documents, std::vector<OrthMerge> orth_merges,
                         BuildMeta meta)
    : inventory_(std::move(inventory)),
      edges_(std::move(edges)),
      components_(std::move(components)),
      postings_(std::move(postings)),
      documents_(std::move(documents)),
      orth_merges_(std::move(orth_merges)),
      meta_(std::move(meta)) {
  const std::size_t n = inventory_.size();
  if (postings_.size() != n) invalid("postings size differs from inventory size");

  component_of_.assign(n, ComponentId{0});
  std::vector<bool> covered(n, false);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (comp.id.index() != c) invalid("component ids must be dense");
    if (comp.members.empty()) invalid("empty component");
    bool has_label = false;
    for (TermId m : comp.members) {
      if (!inventory_.contains(m) || covered[m.index()]) invalid("components must partition terms");
      covered[m.index()] = true;
      component_of_[m.index()] = comp.id;
      has_label = has_label || m == comp.label;
    }
    if (!has_label) invalid("label outside its component");
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    invalid("a term belongs to no component");
  }

  comp_adj_.resize(n);
  exp_r_adj_.resize(n);
  for (const auto& e : edges_) {
    if (!inventory_.contains(e.a) || !inventory_.contains(e.b) || e.a == e.b) {
      invalid("edge endpoint out of range");
    }
    if (in_comp(e.kind)) {
      comp_adj_[e.a.index()].push_back({e.b, e.kind});
      comp_adj_[e.b.index()].push_back({e.a, e.kind});
    } else if (e.kind == RelationKind::exp_r) {
      exp_r_adj_[e.a.index()].push_back({e.b, e.kind});
      exp_r_adj_[e.b.index()].push_back({e.a, e.kind});
    }
  }
  auto tidy = [](std::vector<Neighbor>& v) {
    std::sort(v.begin(), v.end(), [](const Neighbor& x, const Neighbor& y) {
      return std::pair(x.term, x.kind) < std::pair(y.term, y.kind);
    });
    // one entry per neighbour; keep the tightest kind
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Neighbor& x, const Neighbor& y) { return x.term == y.term; }),
            v.end());
  };
  for (auto& v : comp_adj_) tidy(v);
  for (auto& v : exp_r_adj_) tidy(v);

  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (!document_index_.emplace(documents_[i].doc_id, i).second) invalid("duplicate document");
  }
  document_terms_.resize(documents_.size());
  for (std::size_t t = 0; t < n; ++t) {
    std::uint64_t total = 0;
    for (const auto& p : postings_[t]) {
      auto it = document_index_.find(p.doc_id);
      if (it == document_index_.end()) invalid("posting references an unknown document");
      document_terms_[it->second].push_back(TermId{static_cast<std::uint32_t>(t)});
      total += p.count;
    }
    const Term& term = inventory_.terms()[t];
    if (total != term.freq_occurrences || postings_[t].size() != term.freq_docs) {
      invalid("postings disagree with term frequencies");
    }
  }
}

const Component& TermNetwork::component(ComponentId id) const {
  if (id.index() >= components_.size()) {
    throw Error(Errc::invalid_argument, "unknown component id " + std::to_string(id.value));
  }
  return components_[id.index()];
}

const Component& TermNetwork::component_of(TermId id) const {
  inventory_.at(id);
  return components_[component_of_[id.index()].index()];
}

const DocumentInfo* TermNetwork::find_document(std::string_view doc_id) const {
  auto it = document_index_.find(doc_id);
  return it == document_index_.end() ? nullptr : &documents_[it->second];
}

std::span<const Posting> TermNetwork::postings(TermId id) const {
  inventory_.at(id);
  return postings_[id.index()];
}

std::span<const TermId> TermNetwork::terms_in_document(std::string_view doc_id) const {
  auto it = document_index_.find(doc_id);
  if (it == document_index_.end()) return {};
  return document_terms_[it->second];
}

std::span<const Neighbor> TermNetwork::comp_neighbors(TermId id) const {
  inventory_.at(id);
  return comp_adj_[id.index()];
}

std::span<const Neighbor> TermNetwork::exp_r_neighbors(TermId id) const {
  inventory_.at(id);
  return exp_r_adj_[id.index()];
}

std::vector<VariationEdge> TermNetwork::component_edges(ComponentId id) const {
  const auto& comp = component(id);
  std::vector<VariationEdge> out;
  for (const auto& e : edges_) {
    if (in_comp(e.kind) && component_of_[e.a.index()] == comp.id &&
        component_of_[e.b.index()] == comp.id) {
      out.push_back(e);
    }
  }
  return out;
}

bool operator==(const TermNetwork& a, const TermNetwork& b) {
  return a.inventory_ == b.inventory_ && a.edges_ == b.edges_ &&
         a.components_ == b.components_ && a.postings_ == b.postings_ &&
         a.documents_ == b.documents_ && a.orth_merges_ == b.orth_merges_ && a.meta_ == b.meta_;
}

// ---------------------------------------------------------------- components

std::vector<Component> build_components(const TermInventory& inv,
                                        std::span<const VariationEdge> edges) {
  const std::size_t n = inv.size();
  DisjointSets sets(n);
  for (const auto& e : edges) {
    if (!in_comp(e.kind)) continue;
    if (!inv.contains(e.a) || !inv.contains(e.b)) {
      throw Error(Errc::invalid_argument, "edge endpoint out of range");
    }
    sets.unite(e.a.index(), e.b.index());
  }
  std::vector<Component> comps;
  std::unordered_map<std::size_t, std::size_t> slot_of_root;
  for (std::size_t t = 0; t < n; ++t) {
    const auto root = sets.find(t);
    auto [it, fresh] = slot_of_root.emplace(root, comps.size());
    if (fresh) {
      comps.push_back(Component{ComponentId{static_cast<std::uint32_t>(comps.size())}, {}, {}});
    }
    comps[it->second].members.push_back(TermId{static_cast<std::uint32_t>(t)});
  }
  const auto degree = comp_degrees(n, edges);
  for (auto& c : comps) c.label = pick_label(c.members, degree, inv);
  return comps;
}

TermId label_component(const Component& component, std::span<const VariationEdge> edges,
                       const TermInventory& inv) {
  if (component.members.empty()) {
    throw Error(Errc::invalid_argument, "cannot label an empty component");
  }
  std::vector<bool> inside(inv.size(), false);
  for (TermId m : component.members) inside[inv.at(m).id.index()] = true;
  const auto degree = comp_degrees(inv.size(), edges, &inside);
  return pick_label(component.members, degree, inv);
}

std::set<TermId> select_mwt_candidates(const TermNetwork& net, std::size_t min_component_size) {
  std::set<TermId> out;
  for (const auto& c : net.components()) {
    if (c.size() >= min_component_size && net.term(c.label).length() >= 2) out.insert(c.label);
  }
  return out;
}

// ---------------------------------------------------------------- build

TermNetwork build_network(std::span<const Document> corpus, const SynonymLexicon& lex,
                          const BuildConfig& config) {
  if (corpus.empty()) throw Error(Errc::empty_corpus, "corpus contains no documents");

  std::vector<const Document*> ordered;
  ordered.reserve(corpus.size());
  for (const auto& d : corpus) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(),
            [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });

  std::vector<NounPhraseSpan> spans;
  std::vector<DocumentInfo> documents;
  for (const Document* doc : ordered) {
    auto doc_spans = extract_noun_phrases(*doc, ComplexNpConfig{config.max_merge});
    spans.insert(spans.end(), std::make_move_iterator(doc_spans.begin()),
                 std::make_move_iterator(doc_spans.end()));
    documents.push_back(DocumentInfo{doc->doc_id, doc->tokens.size(), doc->metadata});
  }

  TermInventory inv = intern(spans);

  std::vector<std::map<std::string, std::uint32_t>> counts(inv.size());
  for (const auto& span : spans) ++counts[inv.find(span.words)->index()][span.doc_id];
  std::vector<std::vector<Posting>> postings(inv.size());
  for (std::size_t t = 0; t < inv.size(); ++t) {
    for (const auto& [doc_id, count] : counts[t]) postings[t].push_back({doc_id, count});
  }

  std::vector<OrthMerge> orth;
  for (const Term& t : inv.terms()) {
    auto it = t.surfaces.begin();
    if (it == t.surfaces.end()) continue;
    const std::string& canonical = *it;
    for (++it; it != t.surfaces.end(); ++it) orth.push_back({t.id, canonical, *it});
  }

  auto edges = find_all_edges(inv, lex);
  auto components = build_components(inv, edges);

  BuildMeta meta;
  meta.config = config;
  meta.lexicon_source = lex.source_tag();
  meta.documents = corpus.size();
  meta.noun_phrases = spans.size();
  meta.terms = inv.size();
  for (auto kind : kAllRelationKinds) meta.edge_counts[kind] = 0;
  meta.edge_counts[RelationKind::orth] = orth.size();
  for (const auto& e : edges) ++meta.edge_counts[e.kind];
  meta.orth_merges = orth.size();
  meta.components = components.size();
  for (const auto& c : components) {
    ++meta.component_sizes[c.size()];
    if (c.size() >= config.min_component_size && inv.at(c.label).length() >= 2) {
      ++meta.mwt_candidates;
    }
  }

  return TermNetwork(std::move(inv), std::move(edges), std::move(components),
                     std::move(postings), std::move(documents), std::move(orth),
                     std::move(meta));
}

// ---------------------------------------------------------------- TSV exports

void write_inventory_tsv(const TermInventory& inv, std::ostream& out) {
  out << "term_id\twords\tfreq_occurrences\tfreq_docs\tsurfaces\n";
  for (const Term& t : inv.terms()) {
    out << t.id.value << '\t' << join_words(t.words) << '\t' << t.freq_occurrences << '\t'
        << t.freq_docs << '\t';
    bool first = true;
    for (const auto& s : t.surfaces) {
      if (!first) out << '|';
      out << s;
      first = false;
    }
    out << '\n';
  }
}

void write_edges_tsv(std::span<const VariationEdge> edges, std::ostream& out) {
  out << "kind\tterm_id_a\tterm_id_b\n";
  for (const auto& e : edges) {
    out << to_string(e.kind) << '\t' << e.a.value << '\t' << e.b.value << '\n';
  }
}

void write_stats_sidecar(const TermNetwork& net, std::ostream& out) {
  const auto& m = net.meta();
  out << "section\tkey\tvalue\n";
  out << "summary\tdocuments\t" << m.documents << '\n';
  out << "summary\tnoun_phrases\t" << m.noun_phrases << '\n';
  out << "summary\tterms\t" << m.terms << '\n';
  out << "summary\tcomponents\t" << m.components << '\n';
  out << "summary\tmwt_candidates\t" << m.mwt_candidates << '\n';
  for (auto kind : kAllRelationKinds) {
    auto it = m.edge_counts.find(kind);
    out << "edges\t" << to_string(kind) << '\t' << (it == m.edge_counts.end() ? 0 : it->second)
        << '\n';
  }
  for (const auto& [size, count] : m.component_sizes) {
    out << "component_size\t" << size << '\t' << count << '\n';
  }
}

}  // namespace termgraph
