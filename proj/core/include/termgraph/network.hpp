#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termgraph/corpus.hpp"
#include "termgraph/ids.hpp"
#include "termgraph/lexicon.hpp"
#include "termgraph/term.hpp"
#include "termgraph/variation.hpp"

namespace termgraph {

struct Component {
  ComponentId id;
  std::vector<TermId> members;  // ascending
  TermId label;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Component&, const Component&) = default;
};

struct Posting {
  std::string doc_id;
  std::uint32_t count = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct DocumentInfo {
  std::string doc_id;
  std::size_t token_count = 0;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const DocumentInfo&, const DocumentInfo&) = default;
};

// Record of two surface forms collapsed into one term by normalization.
struct OrthMerge {
  TermId term;
  std::string canonical;  // lexicographically smallest surface of the term
  std::string variant;

  friend bool operator==(const OrthMerge&, const OrthMerge&) = default;
};

struct BuildConfig {
  std::size_t max_merge = 2;
  std::size_t min_component_size = 2;
  // Copied verbatim into build metadata; left empty for reproducible output.
  std::string timestamp;

  friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

// JSON object with optional keys max_merge, min_component_size, timestamp.
BuildConfig parse_build_config(std::istream& in);

struct BuildMeta {
  BuildConfig config;
  std::string lexicon_source;
  std::size_t documents = 0;
  std::size_t noun_phrases = 0;
  std::size_t terms = 0;
  std::map<RelationKind, std::size_t> edge_counts;
  std::size_t orth_merges = 0;
  std::size_t components = 0;
  std::size_t mwt_candidates = 0;
  std::map<std::size_t, std::size_t> component_sizes;  // size -> count

  friend bool operator==(const BuildMeta&, const BuildMeta&) = default;
};

struct Neighbor {
  TermId term;
  RelationKind kind;
};

class TermNetwork {
 public:
  TermNetwork(TermInventory inventory, std::vector<VariationEdge> edges,
              std::vector<Component> components, std::vector<std::vector<Posting>> postings,
              std::vector<DocumentInfo> documents, std::vector<OrthMerge> orth_merges,
              BuildMeta meta);

  const TermInventory& inventory() const noexcept { return inventory_; }
  const Term& term(TermId id) const { return inventory_.at(id); }
  std::span<const VariationEdge> edges() const noexcept { return edges_; }
  std::span<const Component> components() const noexcept { return components_; }
  const Component& component(ComponentId id) const;
  const Component& component_of(TermId id) const;
  std::span<const OrthMerge> orth_merges() const noexcept { return orth_merges_; }
  std::span<const DocumentInfo> documents() const noexcept { return documents_; }
  const DocumentInfo* find_document(std::string_view doc_id) const;
  const BuildMeta& meta() const noexcept { return meta_; }

  // Postings sorted by doc_id.
  std::span<const Posting> postings(TermId id) const;
  // Terms occurring in a document, ascending.
  std::span<const TermId> terms_in_document(std::string_view doc_id) const;

  // COMP neighbours, undirected, ascending by term id.
  std::span<const Neighbor> comp_neighbors(TermId id) const;
  // EXP_R neighbours in either direction, ascending by term id.
  std::span<const Neighbor> exp_r_neighbors(TermId id) const;
  std::size_t comp_degree(TermId id) const { return comp_neighbors(id).size(); }
  // COMP edges with both endpoints inside the component.
  std::vector<VariationEdge> component_edges(ComponentId id) const;

  friend bool operator==(const TermNetwork& a, const TermNetwork& b);

 private:
  TermInventory inventory_;
  std::vector<VariationEdge> edges_;
  std::vector<Component> components_;
  std::vector<std::vector<Posting>> postings_;
  std::vector<DocumentInfo> documents_;
  std::vector<OrthMerge> orth_merges_;
  BuildMeta meta_;

  std::vector<ComponentId> component_of_;
  std::vector<std::vector<Neighbor>> comp_adj_;
  std::vector<std::vector<Neighbor>> exp_r_adj_;
  std::map<std::string, std::size_t, std::less<>> document_index_;
  std::vector<std::vector<TermId>> document_terms_;
};

// Connected components of the undirected graph of COMP edges. Components are
// numbered by their smallest member; every term belongs to exactly one.
std::vector<Component> build_components(const TermInventory& inv,
                                        std::span<const VariationEdge> edges);

// Member of maximal COMP degree (distinct neighbours), ties broken by the
// lexicographically smallest word sequence.
TermId label_component(const Component& component, std::span<const VariationEdge> edges,
                       const TermInventory& inv);

// Labels of components with at least `min_component_size` members whose label
// has two or more words.
std::set<TermId> select_mwt_candidates(const TermNetwork& net, std::size_t min_component_size = 2);

// ingest -> intern -> edges -> components -> labels -> postings.
// Throws Error(empty_corpus) for an empty corpus.
TermNetwork build_network(std::span<const Document> corpus, const SynonymLexicon& lex,
                          const BuildConfig& config = {});

inline constexpr int kNetworkFormatVersion = 1;

// Versioned JSON document; byte-identical for identical networks.
void save_network(const TermNetwork& net, std::ostream& out);
// Throws Error(format_version_mismatch) or Error(corrupt_payload, offset).
TermNetwork load_network(std::istream& in);
TermNetwork load_network_file(const std::string& path);

// TSV: term_id, words, freq_occurrences, freq_docs, surfaces (|-joined).
void write_inventory_tsv(const TermInventory& inv, std::ostream& out);
// TSV: kind, term_id_a, term_id_b.
void write_edges_tsv(std::span<const VariationEdge> edges, std::ostream& out);
// Per-kind edge counts and the component-size histogram.
void write_stats_sidecar(const TermNetwork& net, std::ostream& out);

}  // namespace termgraph
