#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "termgraph/corpus.hpp"
#include "termgraph/lexicon.hpp"
#include "termgraph/network.hpp"
#include "termgraph/stats.hpp"

namespace termgraph::testing {

// Root of tests/fixtures; overridable through TERMGRAPH_FIXTURES.
std::filesystem::path fixture_root();
std::filesystem::path fixture_path(const std::string& relative);

std::string read_file(const std::filesystem::path& path);
nlohmann::json read_json(const std::filesystem::path& path);

// A fixture directory holding corpus.txt, lexicon.tsv, resource.txt and
// expected.json (config.json optional).
struct FixtureSet {
  std::vector<Document> corpus;
  SynonymLexicon lexicon;
  BuildConfig config;
  ExternalResource resource;
  nlohmann::json expected;
};
FixtureSet load_fixture_set(const std::string& name);

}  // namespace termgraph::testing
