#include "termgraph/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

using WordSpan = std::span<const std::string>;
using TermIndex = std::map<Words, std::size_t, WordsLess>;

// Indexes of resource terms, keyed by words, restricted by minimum length.
TermIndex index_terms(std::span<const Words> terms, std::size_t min_len) {
  TermIndex index;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].size() >= min_len) index.emplace(terms[i], i);
  }
  return index;
}

// Calls fn(window, start) for every contiguous window of `words` with length in
// [min_len, max_len].
template <typename Fn>
void for_each_window(WordSpan words, std::size_t min_len, std::size_t max_len, Fn&& fn) {
  max_len = std::min(max_len, words.size());
  for (std::size_t len = min_len; len <= max_len; ++len) {
    for (std::size_t i = 0; i + len <= words.size(); ++i) fn(words.subspan(i, len));
  }
}

std::vector<Words> sentence_streams(const Document& doc) {
  std::vector<Words> streams;
  for (std::size_t s = 0; s < doc.sentence_count(); ++s) {
    auto [first, last] = doc.sentence_range(s);
    Words& stream = streams.emplace_back();
    for (std::size_t i = first; i < last; ++i) {
      for (auto& w : normalize_word(doc.tokens[i].lemma)) stream.push_back(std::move(w));
    }
  }
  return streams;
}

std::size_t bucket_of(std::size_t value, std::size_t buckets) {
  return std::min(value, buckets - 1);
}

double share(std::size_t count, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::size_t ExternalResource::uniterm_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(), [](const Words& w) { return w.size() == 1; }));
}

std::size_t ExternalResource::mwt_count() const noexcept { return terms.size() - uniterm_count(); }

ExternalResource load_resource(std::istream& in, std::string name) {
  std::set<Words> unique;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      unique.insert(normalize_text(line));
    } catch (const Error& e) {
      if (e.code() != Errc::empty_after_normalization) throw;
      throw Error(Errc::malformed_resource_line,
                  "resource line " + std::to_string(line_no) + " normalizes to nothing", line_no);
    }
  }
  return ExternalResource{std::move(name), {unique.begin(), unique.end()}};
}

double HistogramBlock::network_share(std::size_t bucket) const noexcept {
  return share(network_counts.at(bucket), network_involved);
}

double HistogramBlock::resource_share(std::size_t bucket) const noexcept {
  return share(resource_counts.at(bucket), resource_involved);
}

OccurrenceRow corpus_occurrence_stats(std::span<const Words> terms,
                                      std::span<const Document> corpus, std::string name) {
  OccurrenceRow row;
  row.name = std::move(name);
  const TermIndex index = index_terms(terms, 2);
  row.mwt_total = static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(), [](const Words& w) { return w.size() > 1; }));
  std::size_t max_len = 0;
  for (const auto& [words, i] : index) max_len = std::max(max_len, words.size());

  std::unordered_map<std::size_t, std::size_t> totals;
  std::set<std::size_t> seen_gt2;
  for (const Document& doc : corpus) {
    bool doc_gt1 = false;
    bool doc_gt2 = false;
    for (const Words& stream : sentence_streams(doc)) {
      for_each_window(stream, 2, max_len, [&](WordSpan window) {
        auto it = index.find(window);
        if (it == index.end()) return;
        ++totals[it->second];
        doc_gt1 = true;
        if (window.size() > 2) doc_gt2 = true;
      });
    }
    row.docs_len_gt1 += doc_gt1 ? 1 : 0;
    row.docs_len_gt2 += doc_gt2 ? 1 : 0;
  }
  for (const auto& [i, total] : totals) {
    ++row.matching_len_gt1;
    if (terms[i].size() > 2) ++row.matching_len_gt2;
    row.max_frequency = std::max(row.max_frequency, total);
  }
  return row;
}

OccurrenceBlock corpus_occurrence_stats(const ExternalResource& res, const TermNetwork& net,
                                        std::span<const Document> corpus) {
  std::vector<Words> labels;
  for (const Component& c : net.components()) {
    const Term& t = net.term(c.label);
    if (t.length() > 1) labels.push_back(t.words);
  }
  return OccurrenceBlock{corpus_occurrence_stats(labels, corpus, "network"),
                         corpus_occurrence_stats(res.terms, corpus, res.name)};
}

LrBlock lr_exp_cross_stats(const ExternalResource& res, const TermNetwork& net) {
  LrBlock block;
  const TermIndex index = index_terms(res.terms, 1);
  std::vector<bool> expanded(res.terms.size(), false);
  for (const Term& t : net.inventory().terms()) {
    bool any = false;
    bool any_mwt = false;
    // proper windows only
    for_each_window(t.words, 1, t.length() - 1, [&](WordSpan window) {
      auto it = index.find(window);
      if (it == index.end()) return;
      any = true;
      any_mwt = any_mwt || window.size() > 1;
      expanded[it->second] = true;
    });
    if (any) ++(t.length() == 1 ? block.network_uniterm : block.network_mwt);
    if (any_mwt) ++block.network_expanding_resource_mwt;
  }
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    if (expanded[i]) ++(res.terms[i].size() == 1 ? block.resource_uniterm : block.resource_mwt);
  }
  return block;
}

HistogramBlock added_word_histogram(const ExternalResource& res, const TermNetwork& net) {
  constexpr std::size_t kB = HistogramBlock::kBuckets;
  HistogramBlock block;
  const TermIndex index = index_terms(res.terms, 2);
  std::array<std::set<std::size_t>, kB> res_sets;
  std::set<std::size_t> res_involved;
  for (const Term& t : net.inventory().terms()) {
    std::array<bool, kB> hit{};
    for_each_window(t.words, 2, t.length(), [&](WordSpan window) {
      auto it = index.find(window);
      if (it == index.end()) return;
      const std::size_t b = bucket_of(t.length() - window.size(), kB);
      hit[b] = true;
      res_sets[b].insert(it->second);
      res_involved.insert(it->second);
    });
    bool involved = false;
    for (std::size_t b = 0; b < kB; ++b) {
      if (!hit[b]) continue;
      ++block.network_counts[b];
      involved = true;
    }
    if (involved) ++block.network_involved;
  }
  for (std::size_t b = 0; b < kB; ++b) block.resource_counts[b] = res_sets[b].size();
  block.resource_involved = res_involved.size();
  return block;
}

ChainBlock chain_reach_stats(const ExternalResource& res, const TermNetwork& net, int k_max) {
  if (k_max < 0 || k_max > 5) throw Error(Errc::invalid_argument, "chain depth must be within 0..5");
  const TermIndex index = index_terms(res.terms, 2);
  const std::size_t n = net.inventory().size();
  std::vector<int> dist(n, -1);
  std::deque<TermId> queue;
  for (const Term& t : net.inventory().terms()) {
    bool seed = false;
    for_each_window(t.words, 2, t.length() - 1, [&](WordSpan window) {
      seed = seed || index.contains(window);
    });
    if (seed) {
      dist[t.id.index()] = 0;
      queue.push_back(t.id);
    }
  }
  while (!queue.empty()) {
    const TermId cur = queue.front();
    queue.pop_front();
    const int d = dist[cur.index()];
    if (d == k_max) continue;
    for (const auto& nb : net.comp_neighbors(cur)) {
      if (dist[nb.term.index()] != -1) continue;
      dist[nb.term.index()] = d + 1;
      queue.push_back(nb.term);
    }
  }
  ChainBlock block;
  block.reachable.assign(static_cast<std::size_t>(k_max) + 1, 0);
  for (int d : dist) {
    if (d < 0) continue;
    for (int k = d; k <= k_max; ++k) ++block.reachable[static_cast<std::size_t>(k)];
  }
  return block;
}

CombinationBlock uniterm_combination_stats(const ExternalResource& res, const TermNetwork& net) {
  std::set<std::string> uniterms;
  for (const auto& t : res.terms) {
    if (t.size() == 1) uniterms.insert(t.front());
  }
  CombinationBlock block;
  std::set<std::string> involved;
  for (const Term& t : net.inventory().terms()) {
    std::set<std::string> hits;
    for (const auto& w : t.words) {
      if (uniterms.contains(w)) hits.insert(w);
    }
    if (hits.size() < 2) continue;
    ++block.buckets[bucket_of(hits.size() - 2, CombinationBlock::kBuckets)];
    involved.insert(hits.begin(), hits.end());
  }
  block.uniterms_involved = involved.size();
  return block;
}

ComparisonReport compare_resource(const ExternalResource& res, const TermNetwork& net,
                                  std::optional<std::span<const Document>> corpus, int k_max) {
  ComparisonReport report;
  report.resource_name = res.name;
  report.resource_uniterms = res.uniterm_count();
  report.resource_mwts = res.mwt_count();
  if (corpus) report.occurrence = corpus_occurrence_stats(res, net, *corpus);
  report.lr = lr_exp_cross_stats(res, net);
  report.histogram = added_word_histogram(res, net);
  report.chain = chain_reach_stats(res, net, k_max);
  report.combination = uniterm_combination_stats(res, net);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::tsv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw Error(Errc::unsupported_format, "unsupported report format '" + std::string(name) + "'");
}

namespace {

using Row = std::vector<std::string>;

struct Table {
  std::string title;
  Row header;
  std::vector<Row> rows;
};

std::string num(std::size_t v) { return std::to_string(v); }

std::vector<Table> build_tables(const ComparisonReport& r) {
  const bool has_rows = r.resource_uniterms + r.resource_mwts > 0;
  std::vector<Table> tables;

  Table resource{"resource", {"name", "uniterms", "mwts"}, {}};
  if (has_rows) resource.rows.push_back({r.resource_name, num(r.resource_uniterms), num(r.resource_mwts)});
  tables.push_back(std::move(resource));

  if (r.occurrence) {
    Table occ{"occurrence",
              {"source", "mwt_total", "matching_len_gt1", "matching_len_gt2", "docs_len_gt1",
               "docs_len_gt2", "max_frequency"},
              {}};
    if (has_rows) {
      for (const OccurrenceRow* row : {&r.occurrence->network, &r.occurrence->resource}) {
        occ.rows.push_back({row->name, num(row->mwt_total), num(row->matching_len_gt1),
                            num(row->matching_len_gt2), num(row->docs_len_gt1),
                            num(row->docs_len_gt2), num(row->max_frequency)});
      }
    }
    tables.push_back(std::move(occ));
  }

  Table lr{"lr_exp", {"side", "uniterm", "mwt"}, {}};
  if (has_rows) {
    lr.rows.push_back({"network", num(r.lr.network_uniterm), num(r.lr.network_mwt)});
    lr.rows.push_back({"resource", num(r.lr.resource_uniterm), num(r.lr.resource_mwt)});
    lr.rows.push_back({"network_expanding_resource_mwt", "", num(r.lr.network_expanding_resource_mwt)});
  }
  tables.push_back(std::move(lr));

  Table hist{"added_words",
             {"side", "added_0", "added_1", "added_2", "added_3plus", "involved", "share_0",
              "share_1", "share_2", "share_3plus"},
             {}};
  if (has_rows) {
    const auto& h = r.histogram;
    Row net{"network"};
    Row res{"resource"};
    for (std::size_t b = 0; b < HistogramBlock::kBuckets; ++b) {
      net.push_back(num(h.network_counts[b]));
      res.push_back(num(h.resource_counts[b]));
    }
    net.push_back(num(h.network_involved));
    res.push_back(num(h.resource_involved));
    for (std::size_t b = 0; b < HistogramBlock::kBuckets; ++b) {
      net.push_back(fixed3(h.network_share(b)));
      res.push_back(fixed3(h.resource_share(b)));
    }
    hist.rows.push_back(std::move(net));
    hist.rows.push_back(std::move(res));
  }
  tables.push_back(std::move(hist));

  Table chain{"chain", {"k", "reachable"}, {}};
  if (has_rows) {
    for (std::size_t k = 0; k < r.chain.reachable.size(); ++k) {
      chain.rows.push_back({num(k), num(r.chain.reachable[k])});
    }
  }
  tables.push_back(std::move(chain));

  Table comb{"uniterm_combination",
             {"uniterms_2", "uniterms_3", "uniterms_4", "uniterms_gt4", "uniterms_involved"},
             {}};
  if (has_rows) {
    Row row;
    for (auto c : r.combination.buckets) row.push_back(num(c));
    row.push_back(num(r.combination.uniterms_involved));
    comb.rows.push_back(std::move(row));
  }
  tables.push_back(std::move(comb));
  return tables;
}

void write_joined(std::ostream& out, std::string_view lead, const Row& row, std::string_view sep,
                  std::string_view tail) {
  out << lead;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << sep;
    out << row[i];
  }
  out << tail << '\n';
}

}  // namespace

void render_report(const ComparisonReport& report, ReportFormat format, std::ostream& out) {
  const auto tables = build_tables(report);
  bool first = true;
  for (const Table& t : tables) {
    if (!first) out << '\n';
    first = false;
    if (format == ReportFormat::tsv) {
      Row header{"#" + t.title};
      header.insert(header.end(), t.header.begin(), t.header.end());
      write_joined(out, "", header, "\t", "");
      for (const Row& row : t.rows) {
        Row full{t.title};
        full.insert(full.end(), row.begin(), row.end());
        write_joined(out, "", full, "\t", "");
      }
    } else {
      out << "## " << t.title << "\n\n";
      write_joined(out, "| ", t.header, " | ", " |");
      write_joined(out, "|", Row(t.header.size(), "---"), "|", "|");
      for (const Row& row : t.rows) write_joined(out, "| ", row, " | ", " |");
    }
  }
  if (!out) throw Error(Errc::io_error, "failed to write report");
}

}  // namespace termgraph
