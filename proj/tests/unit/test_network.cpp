#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

using namespace termgraph;
namespace oracle = termgraph::testing::oracle;

namespace {

std::vector<std::vector<TermId>> members_of(std::span<const Component> comps) {
  std::vector<std::vector<TermId>> out;
  for (const auto& c : comps) out.push_back(c.members);
  return out;
}

TermId id_of(const TermNetwork& net, std::string_view text) {
  auto id = net.inventory().find(normalize_text(text));
  EXPECT_TRUE(id.has_value()) << text;
  return id.value_or(TermId{0});
}

}  // namespace

class FixtureNetwork : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureNetwork, ComponentsLabelsAndCountsMatchOracle) {
  const auto set = termgraph::testing::load_fixture_set(GetParam());
  const auto net = build_network(set.corpus, set.lexicon, set.config);
  const auto& ex = set.expected;

  std::vector<std::vector<TermId>> comps;
  for (const auto& c : ex.at("components")) {
    auto& m = comps.emplace_back();
    for (const auto& id : c) m.push_back(TermId{id.get<std::uint32_t>()});
  }
  EXPECT_EQ(members_of(net.components()), comps);
  ASSERT_EQ(net.components().size(), ex.at("labels").size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    EXPECT_EQ(net.components()[i].label.value, ex["labels"][i].get<std::uint32_t>()) << "component " << i;
  }
  for (const auto& [threshold, count] : ex.at("mwt_candidates").items()) {
    EXPECT_EQ(select_mwt_candidates(net, std::stoul(threshold)).size(), count.get<std::size_t>())
        << "threshold " << threshold;
  }
  const auto& meta = net.meta();
  EXPECT_EQ(meta.orth_merges, ex.at("orth_merges").get<std::size_t>());
  EXPECT_EQ(meta.edge_counts.at(RelationKind::orth), meta.orth_merges);
  for (const auto& [kind, count] : ex.at("edge_counts").items()) {
    EXPECT_EQ(meta.edge_counts.at(*parse_relation_kind(kind)), count.get<std::size_t>()) << kind;
  }
  EXPECT_EQ(meta.noun_phrases, ex.at("span_total").get<std::size_t>());
  EXPECT_EQ(meta.terms, ex.at("terms").size());
  EXPECT_EQ(meta.documents, set.corpus.size());
  EXPECT_EQ(meta.components, comps.size());
  EXPECT_EQ(meta.mwt_candidates, ex["mwt_candidates"][std::to_string(set.config.min_component_size)]);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureNetwork, ::testing::Values("hand", "stats"));

TEST(Network, HandFixtureNeighboursAndPostings) {
  const auto set = termgraph::testing::load_fixture_set("hand");
  const auto net = build_network(set.corpus, set.lexicon, set.config);
  const TermId os = id_of(net, "object software");
  const TermId oos = id_of(net, "object oriented software");
  const TermId oost = id_of(net, "object oriented software testing");
  ASSERT_EQ(net.comp_neighbors(os).size(), 1u);
  EXPECT_EQ(net.comp_neighbors(os)[0].term, oos);
  EXPECT_EQ(net.comp_neighbors(os)[0].kind, RelationKind::ins);
  ASSERT_EQ(net.exp_r_neighbors(oos).size(), 1u);
  EXPECT_EQ(net.exp_r_neighbors(oos)[0].term, oost);
  EXPECT_EQ(net.component_of(os).id, net.component_of(oos).id);
  EXPECT_NE(net.component_of(oos).id, net.component_of(oost).id);

  const auto postings = net.postings(os);
  ASSERT_EQ(postings.size(), 2u);
  EXPECT_EQ(postings[0].doc_id, "d1");
  EXPECT_EQ(postings[1].doc_id, "d2");
  EXPECT_EQ(net.find_document("d1")->metadata.at("year"), "2005");
  EXPECT_EQ(net.find_document("nope"), nullptr);
  EXPECT_EQ(net.terms_in_document("d5").size(), 2u);
  EXPECT_TRUE(net.terms_in_document("nope").empty());

  const auto& surfaces = net.term(id_of(net, "bone marrow cell")).surfaces;
  EXPECT_EQ(surfaces, (std::set<std::string>{"bone marrow cells"}));
}

TEST(Network, OrthMergesRecordSurfaceVariants) {
  std::istringstream in(
      "#DOC a\nObject-oriented/ADJ software/NOUN fails/OTHER\n\n"
      "#DOC b\nobject/NOUN oriented/ADJ software/NOUN fails/OTHER\nobject/NOUN oriented/ADJ softwares/NOUN\n");
  const auto docs = parse_corpus(in);
  const auto net = build_network(docs, SynonymLexicon{});
  ASSERT_EQ(net.inventory().size(), 1u);
  EXPECT_EQ(net.term(TermId{0}).surfaces.size(), 3u);
  ASSERT_EQ(net.orth_merges().size(), 2u);
  EXPECT_EQ(net.orth_merges()[0].canonical, "Object-oriented software");
  EXPECT_EQ(net.meta().edge_counts.at(RelationKind::orth), 2u);
}

TEST(Network, EmptyCorpusThrows) {
  try {
    build_network({}, SynonymLexicon{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_corpus);
  }
}

TEST(Components, RandomGraphsMatchUnionFind) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 20; ++round) {
    const auto g = termgraph::testing::random_comp_graph(rng, 200, 400);
    const auto inv = termgraph::testing::numbered_inventory(g.nodes);
    const auto comps = build_components(inv, g.edges);
    ASSERT_EQ(members_of(comps), oracle::union_find_components(g.nodes, g.edges));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_EQ(comps[i].id.value, i);
      EXPECT_EQ(comps[i].label, oracle::scan_label(comps[i].members, g.edges, inv));
    }
  }
}

TEST(Components, NonCompEdgesNeverMerge) {
  const auto inv = termgraph::testing::numbered_inventory(4);
  const std::vector<VariationEdge> edges = {{RelationKind::exp_r, TermId{0}, TermId{1}},
                                            {RelationKind::lr_exp, TermId{2}, TermId{3}}};
  EXPECT_EQ(build_components(inv, edges).size(), 4u);
  auto with_ins = edges;
  with_ins.push_back({RelationKind::ins, TermId{1}, TermId{2}});
  EXPECT_EQ(build_components(inv, with_ins).size(), 3u);
}

TEST(Components, LabelTieBreaksLexicographically) {
  const auto inv = termgraph::testing::make_inventory({{"ba"}, {"ab"}, {"ca"}});
  // ab - ba - ca is a path: ba has degree 2
  std::vector<VariationEdge> edges = {{RelationKind::orth, TermId{0}, TermId{1}},
                                      {RelationKind::orth, TermId{1}, TermId{2}}};
  auto comps = build_components(inv, edges);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(inv.at(comps[0].label).words, Words{"ba"});
  edges.push_back({RelationKind::orth, TermId{0}, TermId{2}});
  comps = build_components(inv, edges);
  EXPECT_EQ(inv.at(comps[0].label).words, Words{"ab"});
}

TEST(BuildConfig, ParsesAndRejectsUnknownKeys) {
  std::istringstream in(R"({"max_merge": 3, "min_component_size": 4, "timestamp": "t"})");
  const auto cfg = parse_build_config(in);
  EXPECT_EQ(cfg.max_merge, 3u);
  EXPECT_EQ(cfg.min_component_size, 4u);
  EXPECT_EQ(cfg.timestamp, "t");
  std::istringstream bad(R"({"max_merges": 3})");
  EXPECT_THROW(parse_build_config(bad), Error);
  std::istringstream broken("{");
  EXPECT_THROW(parse_build_config(broken), Error);
}

TEST(Sidecars, InventoryEdgesAndStats) {
  const auto set = termgraph::testing::load_fixture_set("hand");
  const auto net = build_network(set.corpus, set.lexicon, set.config);
  std::ostringstream inv;
  write_inventory_tsv(net.inventory(), inv);
  EXPECT_NE(inv.str().find("8\tobject software\t2\t2\tobject software"), std::string::npos) << inv.str();
  std::ostringstream edges;
  write_edges_tsv(net.edges(), edges);
  EXPECT_NE(edges.str().find("INS\t8\t6"), std::string::npos) << edges.str();
  std::ostringstream stats;
  write_stats_sidecar(net, stats);
  EXPECT_NE(stats.str().find("edges\tLR_EXP\t2"), std::string::npos);
  EXPECT_NE(stats.str().find("component_size\t2\t3"), std::string::npos);
}
