#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "json.hpp"
#include "termgraph/error.hpp"
#include "termgraph/network.hpp"

namespace termgraph {
namespace {

using nlohmann::json;

json to_json(const BuildConfig& c) {
  return json{{"max_merge", c.max_merge},
              {"min_component_size", c.min_component_size},
              {"timestamp", c.timestamp}};
}

BuildConfig config_from_json(const json& j) {
  BuildConfig c;
  if (!j.is_object()) throw Error(Errc::invalid_argument, "build config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "max_merge") {
      c.max_merge = value.get<std::size_t>();
    } else if (key == "min_component_size") {
      c.min_component_size = value.get<std::size_t>();
    } else if (key == "timestamp") {
      c.timestamp = value.get<std::string>();
    } else {
      throw Error(Errc::invalid_argument, "unknown build config key '" + key + "'");
    }
  }
  return c;
}

json meta_to_json(const BuildMeta& m) {
  json edges = json::object();
  for (const auto& [kind, count] : m.edge_counts) edges[std::string(to_string(kind))] = count;
  json sizes = json::array();
  for (const auto& [size, count] : m.component_sizes) sizes.push_back({size, count});
  return json{{"config", to_json(m.config)},
              {"lexicon_source", m.lexicon_source},
              {"documents", m.documents},
              {"noun_phrases", m.noun_phrases},
              {"terms", m.terms},
              {"edge_counts", edges},
              {"orth_merges", m.orth_merges},
              {"components", m.components},
              {"mwt_candidates", m.mwt_candidates},
              {"component_sizes", sizes}};
}

RelationKind kind_from(const json& j) {
  auto kind = parse_relation_kind(j.get<std::string>());
  if (!kind) throw Error(Errc::corrupt_payload, "unknown relation kind " + j.dump(), 0);
  return *kind;
}

BuildMeta meta_from_json(const json& j) {
  BuildMeta m;
  m.config = config_from_json(j.at("config"));
  m.lexicon_source = j.at("lexicon_source").get<std::string>();
  m.documents = j.at("documents").get<std::size_t>();
  m.noun_phrases = j.at("noun_phrases").get<std::size_t>();
  m.terms = j.at("terms").get<std::size_t>();
  for (const auto& [key, value] : j.at("edge_counts").items()) {
    m.edge_counts[kind_from(json(key))] = value.get<std::size_t>();
  }
  m.orth_merges = j.at("orth_merges").get<std::size_t>();
  m.components = j.at("components").get<std::size_t>();
  m.mwt_candidates = j.at("mwt_candidates").get<std::size_t>();
  for (const auto& pair : j.at("component_sizes")) {
    m.component_sizes[pair.at(0).get<std::size_t>()] = pair.at(1).get<std::size_t>();
  }
  return m;
}

TermId term_id(const json& j) { return TermId{j.get<std::uint32_t>()}; }

TermNetwork network_from_json(const json& doc) {
  std::vector<Term> terms;
  for (const auto& jt : doc.at("inventory")) {
    Term t;
    t.id = term_id(jt.at("id"));
    t.words = jt.at("words").get<Words>();
    t.head_index = t.words.empty() ? 0 : t.words.size() - 1;
    for (const auto& s : jt.at("surfaces")) t.surfaces.insert(s.get<std::string>());
    t.freq_occurrences = jt.at("freq_occurrences").get<std::uint64_t>();
    t.freq_docs = jt.at("freq_docs").get<std::uint64_t>();
    terms.push_back(std::move(t));
  }
  auto inv = TermInventory::from_terms(std::move(terms));

  std::vector<VariationEdge> edges;
  for (const auto& je : doc.at("edges")) {
    edges.push_back({kind_from(je.at(0)), term_id(je.at(1)), term_id(je.at(2))});
  }
  std::vector<OrthMerge> orth;
  for (const auto& jo : doc.at("orth_merges")) {
    orth.push_back({term_id(jo.at(0)), jo.at(1).get<std::string>(), jo.at(2).get<std::string>()});
  }
  std::vector<Component> components;
  for (const auto& jc : doc.at("components")) {
    Component c;
    c.id = ComponentId{jc.at("id").get<std::uint32_t>()};
    c.label = term_id(jc.at("label"));
    for (const auto& m : jc.at("members")) c.members.push_back(term_id(m));
    components.push_back(std::move(c));
  }
  std::vector<std::vector<Posting>> postings;
  for (const auto& jp : doc.at("postings")) {
    auto& list = postings.emplace_back();
    for (const auto& p : jp) list.push_back({p.at(0).get<std::string>(), p.at(1).get<std::uint32_t>()});
  }
  std::vector<DocumentInfo> documents;
  for (const auto& jd : doc.at("documents")) {
    documents.push_back({jd.at("doc_id").get<std::string>(), jd.at("token_count").get<std::size_t>(),
                         jd.at("metadata").get<std::map<std::string, std::string>>()});
  }
  return TermNetwork(std::move(inv), std::move(edges), std::move(components), std::move(postings),
                     std::move(documents), std::move(orth), meta_from_json(doc.at("build_meta")));
}

}  // namespace

BuildConfig parse_build_config(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("build config: ") + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("build config: ") + e.what());
  }
}

void save_network(const TermNetwork& net, std::ostream& out) {
  json inventory = json::array();
  for (const Term& t : net.inventory().terms()) {
    inventory.push_back({{"id", t.id.value},
                         {"words", t.words},
                         {"surfaces", t.surfaces},
                         {"freq_occurrences", t.freq_occurrences},
                         {"freq_docs", t.freq_docs}});
  }
  json edges = json::array();
  for (const auto& e : net.edges()) edges.push_back({std::string(to_string(e.kind)), e.a.value, e.b.value});
  json orth = json::array();
  for (const auto& o : net.orth_merges()) orth.push_back({o.term.value, o.canonical, o.variant});
  json components = json::array();
  for (const auto& c : net.components()) {
    json members = json::array();
    for (TermId m : c.members) members.push_back(m.value);
    components.push_back({{"id", c.id.value}, {"label", c.label.value}, {"members", members}});
  }
  json postings = json::array();
  for (const Term& t : net.inventory().terms()) {
    json list = json::array();
    for (const auto& p : net.postings(t.id)) list.push_back({p.doc_id, p.count});
    postings.push_back(std::move(list));
  }
  json documents = json::array();
  for (const auto& d : net.documents()) {
    documents.push_back({{"doc_id", d.doc_id}, {"token_count", d.token_count}, {"metadata", d.metadata}});
  }
  const json doc = {{"termgraph_version", kNetworkFormatVersion},
                    {"build_meta", meta_to_json(net.meta())},
                    {"inventory", std::move(inventory)},
                    {"edges", std::move(edges)},
                    {"orth_merges", std::move(orth)},
                    {"components", std::move(components)},
                    {"postings", std::move(postings)},
                    {"documents", std::move(documents)}};
  out << doc.dump(1) << '\n';
  if (!out) throw Error(Errc::io_error, "failed to write network");
}

TermNetwork load_network(std::istream& in) {
  const std::string payload{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  json doc;
  try {
    doc = json::parse(payload);
  } catch (const json::parse_error& e) {
    throw Error(Errc::corrupt_payload,
                "network payload is not valid JSON at byte " + std::to_string(e.byte), e.byte);
  }
  if (!doc.is_object() || !doc.contains("termgraph_version")) {
    throw Error(Errc::corrupt_payload, "missing termgraph_version", 0);
  }
  const auto& version = doc["termgraph_version"];
  if (!version.is_number_integer() || version.get<int>() != kNetworkFormatVersion) {
    throw Error(Errc::format_version_mismatch,
                "network format version " + version.dump() + " is not supported (expected " +
                    std::to_string(kNetworkFormatVersion) + ")");
  }
  try {
    return network_from_json(doc);
  } catch (const json::exception& e) {
    throw Error(Errc::corrupt_payload, std::string("malformed network payload: ") + e.what(), 0);
  } catch (const Error& e) {
    if (e.code() == Errc::corrupt_payload) throw;
    throw Error(Errc::corrupt_payload, std::string("malformed network payload: ") + e.what(), 0);
  }
}

TermNetwork load_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open network file '" + path + "'");
  return load_network(in);
}

}  // namespace termgraph
