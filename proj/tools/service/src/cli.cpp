#include "termgraph/service/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "termgraph/error.hpp"
#include "termgraph/network.hpp"
#include "termgraph/normalize.hpp"
#include "termgraph/refine.hpp"
#include "termgraph/service/server.hpp"
#include "termgraph/stats.hpp"

namespace termgraph::service {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
  return out;
}

std::vector<Document> read_corpus(const std::string& path, const std::string& tag_map_path) {
  TagMap tags = TagMap::builtin();
  if (!tag_map_path.empty()) {
    auto in = open_input(tag_map_path);
    tags = TagMap::load(in);
  }
  auto in = open_input(path);
  try {
    return parse_corpus(in, tags);
  } catch (const Error& e) {
    if (e.code() != Errc::malformed_record) throw;
    throw Error(e.code(), path + ":" + std::to_string(e.location()) + ": " + e.what(), e.location());
  }
}

std::string network_default() {
  const char* env = std::getenv("TERMGRAPH_NETWORK");
  return env ? env : "";
}

std::string path_label(const std::vector<RelationKind>& path, SuggestionSource source) {
  if (source == SuggestionSource::exact) return "EXACT";
  if (source == SuggestionSource::combination) return "UNITERMS";
  std::string out;
  for (auto kind : path) {
    if (!out.empty()) out += '>';
    out += to_string(kind);
  }
  return out;
}

struct ExtractArgs {
  std::string corpus, tag_map, output;
  std::size_t max_merge = 2;
};

int run_extract(const ExtractArgs& a, std::ostream& out) {
  const auto docs = read_corpus(a.corpus, a.tag_map);
  std::vector<NounPhraseSpan> spans;
  for (const auto& doc : docs) {
    auto nps = extract_noun_phrases(doc, {a.max_merge});
    spans.insert(spans.end(), std::make_move_iterator(nps.begin()), std::make_move_iterator(nps.end()));
  }
  const TermInventory inv = intern(spans);
  auto file = open_output(a.output);
  write_inventory_tsv(inv, file);
  out << "documents\t" << docs.size() << "\nnoun_phrases\t" << spans.size() << "\nterms\t"
      << inv.size() << '\n';
  return kExitOk;
}

struct BuildArgs {
  std::string corpus, lexicon, config, output, tag_map;
};

int run_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  BuildConfig config;
  if (!a.config.empty()) {
    auto in = open_input(a.config);
    config = parse_build_config(in);
  }
  SynonymLexicon lex("none");
  if (!a.lexicon.empty()) {
    auto in = open_input(a.lexicon);
    try {
      lex = SynonymLexicon::load(in, std::filesystem::path(a.lexicon).filename().string());
    } catch (const Error& e) {
      throw Error(e.code(), a.lexicon + ":" + std::to_string(e.location()) + ": " + e.what(),
                  e.location());
    }
    for (const auto& d : lex.rejected()) {
      err << "warning: " << a.lexicon << ":" << d.line << ": " << d.reason << '\n';
    }
  }
  const auto docs = read_corpus(a.corpus, a.tag_map);
  const TermNetwork net = build_network(docs, lex, config);
  {
    auto file = open_output(a.output);
    save_network(net, file);
  }
  auto sidecar = open_output(a.output + ".stats.tsv");
  write_stats_sidecar(net, sidecar);
  const BuildMeta& m = net.meta();
  out << "documents\t" << m.documents << "\nnoun_phrases\t" << m.noun_phrases << "\nterms\t"
      << m.terms << "\ncomponents\t" << m.components << "\nmwt_candidates\t" << m.mwt_candidates
      << '\n';
  return kExitOk;
}

struct RefineArgs {
  std::string network, query, mode = "auto";
  int k = 2;
  std::size_t limit = 50;
};

int run_refine(const RefineArgs& a, std::ostream& out) {
  const auto mode = parse_query_mode(a.mode);
  if (!mode) throw Error(Errc::invalid_argument, "unknown mode '" + a.mode + "'");
  const Query query = Query::make(a.query, *mode, a.k);
  const TermNetwork net = load_network_file(a.network);
  const auto suggestions = refine(query, net);
  if (suggestions.empty()) return kExitEmpty;
  out << "words\trelation_path\tscore\tdoc_count\n";
  for (std::size_t i = 0; i < suggestions.size() && i < a.limit; ++i) {
    const auto& s = suggestions[i];
    char score[32];
    std::snprintf(score, sizeof score, "%.3f", s.score);
    out << join_words(net.term(s.term).words) << '\t' << path_label(s.relation_path, s.source)
        << '\t' << score << '\t' << s.doc_count << '\n';
  }
  return kExitOk;
}

struct StatsArgs {
  std::string network, resource, output, format = "tsv", corpus, tag_map;
  int k = 3;
};

int run_stats(const StatsArgs& a, std::ostream& out) {
  const ReportFormat format = parse_report_format(a.format);
  const TermNetwork net = load_network_file(a.network);
  auto res_in = open_input(a.resource);
  const ExternalResource res =
      load_resource(res_in, std::filesystem::path(a.resource).stem().string());
  std::optional<std::vector<Document>> corpus;
  if (!a.corpus.empty()) corpus = read_corpus(a.corpus, a.tag_map);
  const auto report = corpus ? compare_resource(res, net, std::span<const Document>(*corpus), a.k)
                             : compare_resource(res, net, std::nullopt, a.k);
  if (a.output.empty() || a.output == "-") {
    render_report(report, format, out);
  } else {
    auto file = open_output(a.output);
    render_report(report, format, file);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Term variation networks for query refinement", "termgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "termgraph 0.1.0");

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Chunk a tagged corpus into a term inventory");
  extract->add_option("-c,--corpus", ex.corpus, "Tagged corpus")->required();
  extract->add_option("-t,--tag-map", ex.tag_map, "Tag map TSV (input tag, coarse tag)");
  extract->add_option("-o,--output", ex.output, "Inventory TSV to write")->required();
  extract->add_option("--max-merge", ex.max_merge, "Simplex spans merged per complex NP")
      ->check(CLI::Range(1, 16));

  BuildArgs bu;
  auto* build = app.add_subcommand("build", "Build and save a term network");
  build->add_option("-c,--corpus", bu.corpus, "Tagged corpus")->required();
  build->add_option("-l,--lexicon", bu.lexicon, "Synonym lexicon TSV");
  build->add_option("--config", bu.config, "Build config JSON");
  build->add_option("-t,--tag-map", bu.tag_map, "Tag map TSV");
  build->add_option("-o,--output", bu.output, "Network file to write")->required();

  RefineArgs re;
  re.network = network_default();
  auto* refine_cmd = app.add_subcommand("refine", "Print ranked refinements of a query");
  refine_cmd->add_option("query", re.query, "Query text")->required();
  refine_cmd->add_option("-n,--network", re.network, "Network file (default $TERMGRAPH_NETWORK)");
  refine_cmd->add_option("-m,--mode", re.mode,
                         "exact|variants|lr_expand|chain|uniterm_combine|auto");
  refine_cmd->add_option("-k,--depth", re.k, "Chain depth")->check(CLI::Range(0, kMaxChainDepth));
  refine_cmd->add_option("--limit", re.limit, "Maximum rows")->check(CLI::PositiveNumber);

  StatsArgs st;
  st.network = network_default();
  auto* stats = app.add_subcommand("stats", "Compare the network against an external resource");
  stats->add_option("-n,--network", st.network, "Network file (default $TERMGRAPH_NETWORK)");
  stats->add_option("-r,--resource", st.resource, "Resource file, one term per line")->required();
  stats->add_option("-o,--output", st.output, "Report file (default stdout)");
  stats->add_option("-f,--format", st.format, "tsv|markdown");
  stats->add_option("--corpus", st.corpus, "Evaluation corpus for occurrence counts");
  stats->add_option("-t,--tag-map", st.tag_map, "Tag map TSV for --corpus");
  stats->add_option("-k,--depth", st.k, "Largest chain depth")->check(CLI::Range(0, kMaxChainDepth));

  ServiceConfig sv;
  sv.network_path = network_default();
  auto* serve = app.add_subcommand("serve", "Serve the refinement API over HTTP");
  serve->add_option("-n,--network", sv.network_path, "Network file (default $TERMGRAPH_NETWORK)");
  serve->add_option("--host", sv.host, "Listen address");
  serve->add_option("-p,--port", sv.port, "Listen port")->check(CLI::Range(0, 65535));
  serve->add_option("--max-k", sv.max_k, "Largest chain depth accepted")
      ->check(CLI::Range(0, kMaxChainDepth));
  serve->add_option("--limit", sv.suggestion_limit, "Page size cap")->check(CLI::PositiveNumber);
  serve->add_flag("--cors", sv.cors_allowed, "Send Access-Control-Allow-Origin: *");
  serve->add_option("--static", sv.static_dir, "Directory of UI assets served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto need_network = [](const std::string& path) {
    if (path.empty()) {
      throw Error(Errc::invalid_argument, "no network given (use --network or TERMGRAPH_NETWORK)");
    }
  };
  try {
    if (*extract) return run_extract(ex, out);
    if (*build) return run_build(bu, out, err);
    if (*refine_cmd) {
      need_network(re.network);
      return run_refine(re, out);
    }
    if (*stats) {
      need_network(st.network);
      return run_stats(st, out);
    }
    if (*serve) {
      need_network(sv.network_path);
      sv.validate();
      return run_server(sv, err);
    }
  } catch (const Error& e) {
    err << "termgraph: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "termgraph: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace termgraph::service
