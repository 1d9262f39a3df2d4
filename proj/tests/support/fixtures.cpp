#include "fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace termgraph::testing {

std::filesystem::path fixture_root() {
  if (const char* env = std::getenv("TERMGRAPH_FIXTURES")) return env;
  return TERMGRAPH_FIXTURE_DIR;
}

std::filesystem::path fixture_path(const std::string& relative) { return fixture_root() / relative; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::filesystem::path& path) {
  return nlohmann::json::parse(read_file(path));
}

FixtureSet load_fixture_set(const std::string& name) {
  const auto dir = fixture_root() / name;
  FixtureSet set;
  {
    std::ifstream in(dir / "corpus.txt", std::ios::binary);
    set.corpus = parse_corpus(in);
  }
  {
    std::ifstream in(dir / "lexicon.tsv", std::ios::binary);
    set.lexicon = SynonymLexicon::load(in, "lexicon.tsv");
  }
  if (std::filesystem::exists(dir / "config.json")) {
    std::ifstream in(dir / "config.json", std::ios::binary);
    set.config = parse_build_config(in);
  }
  {
    std::ifstream in(dir / "resource.txt", std::ios::binary);
    set.resource = load_resource(in, "resource");
  }
  set.expected = read_json(dir / "expected.json");
  return set;
}

}  // namespace termgraph::testing
