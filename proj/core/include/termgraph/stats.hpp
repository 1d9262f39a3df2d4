#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termgraph/corpus.hpp"
#include "termgraph/network.hpp"

namespace termgraph {

// A controlled vocabulary: normalized, deduplicated, sorted word sequences.
struct ExternalResource {
  std::string name;
  std::vector<Words> terms;

  std::size_t uniterm_count() const noexcept;
  std::size_t mwt_count() const noexcept;
};

// One term per line; blank lines are skipped. A non-blank line that
// normalizes to nothing throws Error(malformed_resource_line, line).
ExternalResource load_resource(std::istream& in, std::string name);

struct OccurrenceRow {
  std::string name;
  std::size_t mwt_total = 0;
  std::size_t matching_len_gt1 = 0;
  std::size_t matching_len_gt2 = 0;
  std::size_t docs_len_gt1 = 0;
  std::size_t docs_len_gt2 = 0;
  std::size_t max_frequency = 0;

  friend bool operator==(const OccurrenceRow&, const OccurrenceRow&) = default;
};

struct OccurrenceBlock {
  OccurrenceRow network;
  OccurrenceRow resource;

  friend bool operator==(const OccurrenceBlock&, const OccurrenceBlock&) = default;
};

struct LrBlock {
  // Network terms that are a proper LR expansion of some resource term,
  // split by the network term's own length (uniterm / multiword).
  std::size_t network_uniterm = 0;
  std::size_t network_mwt = 0;
  // Resource terms having at least one LR expansion in the network.
  std::size_t resource_uniterm = 0;
  std::size_t resource_mwt = 0;
  // Network terms expanding a resource MWT; the seed set of the chain block.
  std::size_t network_expanding_resource_mwt = 0;

  friend bool operator==(const LrBlock&, const LrBlock&) = default;
};

struct HistogramBlock {
  static constexpr std::size_t kBuckets = 4;  // 0, 1, 2, 3+ added words
  std::array<std::size_t, kBuckets> network_counts{};
  std::size_t network_involved = 0;
  std::array<std::size_t, kBuckets> resource_counts{};
  std::size_t resource_involved = 0;

  double network_share(std::size_t bucket) const noexcept;
  double resource_share(std::size_t bucket) const noexcept;
  friend bool operator==(const HistogramBlock&, const HistogramBlock&) = default;
};

struct ChainBlock {
  std::vector<std::size_t> reachable;  // index k: cumulative count

  friend bool operator==(const ChainBlock&, const ChainBlock&) = default;
};

struct CombinationBlock {
  static constexpr std::size_t kBuckets = 4;  // 2, 3, 4, >4 uniterms
  std::array<std::size_t, kBuckets> buckets{};
  std::size_t uniterms_involved = 0;

  friend bool operator==(const CombinationBlock&, const CombinationBlock&) = default;
};

struct ComparisonReport {
  std::string resource_name;
  std::size_t resource_uniterms = 0;
  std::size_t resource_mwts = 0;
  std::optional<OccurrenceBlock> occurrence;  // needs an evaluation corpus
  LrBlock lr;
  HistogramBlock histogram;
  ChainBlock chain;
  CombinationBlock combination;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

// Occurrence counts of the multiword entries of `terms` in the corpus. A term
// occurs where its words appear contiguously in a sentence's normalized
// lemma stream.
OccurrenceRow corpus_occurrence_stats(std::span<const Words> terms,
                                      std::span<const Document> corpus, std::string name = {});
// Resource row plus a network row built from the multiword component labels.
OccurrenceBlock corpus_occurrence_stats(const ExternalResource& res, const TermNetwork& net,
                                        std::span<const Document> corpus);

LrBlock lr_exp_cross_stats(const ExternalResource& res, const TermNetwork& net);
// Pairs (resource MWT, network term containing it, equality included),
// bucketed by length difference. Buckets are not exclusive per term.
HistogramBlock added_word_histogram(const ExternalResource& res, const TermNetwork& net);
// Seeds: network terms expanding a resource MWT. reachable[k] counts terms
// within k COMP edges of a seed.
ChainBlock chain_reach_stats(const ExternalResource& res, const TermNetwork& net, int k_max = 3);
CombinationBlock uniterm_combination_stats(const ExternalResource& res, const TermNetwork& net);

ComparisonReport compare_resource(const ExternalResource& res, const TermNetwork& net,
                                  std::optional<std::span<const Document>> corpus = std::nullopt,
                                  int k_max = 3);

enum class ReportFormat { tsv, markdown };
// Throws Error(unsupported_format).
ReportFormat parse_report_format(std::string_view name);
void render_report(const ComparisonReport& report, ReportFormat format, std::ostream& out);

}  // namespace termgraph
