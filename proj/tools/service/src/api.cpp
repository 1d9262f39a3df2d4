#include "termgraph/service/api.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "json.hpp"
#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"
#include "termgraph/refine.hpp"

namespace termgraph::service {
namespace {

using nlohmann::json;

struct HttpError {
  int status;
  std::string code;
  std::string message;
};

[[noreturn]] void bad_request(std::string message) {
  throw HttpError{400, "invalid_argument", std::move(message)};
}

[[noreturn]] void not_found(std::string message) {
  throw HttpError{404, "not_found", std::move(message)};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    const std::size_t next = path.find('/', pos);
    const std::size_t end = next == std::string::npos ? path.size() : next;
    if (end > pos) parts.push_back(path.substr(pos, end - pos));
    pos = end + 1;
  }
  return parts;
}

std::optional<long long> parse_int(const std::string& text) {
  long long value = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

long long int_param(const ApiRequest& req, const std::string& name, long long fallback,
                    long long min, long long max) {
  auto it = req.params.find(name);
  if (it == req.params.end()) return fallback;
  auto value = parse_int(it->second);
  if (!value || *value < min || *value > max) {
    bad_request("parameter '" + name + "' must be an integer in " + std::to_string(min) + ".." +
                std::to_string(max));
  }
  return *value;
}

TermId term_param(const std::string& text, const TermNetwork& net) {
  auto value = parse_int(text);
  if (!value || *value < 0) bad_request("term id must be a non-negative integer");
  if (static_cast<unsigned long long>(*value) >= net.inventory().size()) {
    not_found("no term with id " + text);
  }
  return TermId{static_cast<std::uint32_t>(*value)};
}

std::string source_name(SuggestionSource s) {
  switch (s) {
    case SuggestionSource::exact:
      return "exact";
    case SuggestionSource::relation:
      return "relation";
    case SuggestionSource::combination:
      return "combination";
  }
  return "relation";
}

json term_ref(TermId id, const TermNetwork& net) {
  return {{"id", id.value}, {"words", join_words(net.term(id).words)}};
}

json suggestion_json(const RefinementSuggestion& s, const TermNetwork& net) {
  json path = json::array();
  for (auto kind : s.relation_path) path.push_back(std::string(to_string(kind)));
  return {{"term", term_ref(s.term, net)},
          {"relation_path", path},
          {"score", s.score},
          {"doc_count", s.doc_count},
          {"component", s.component.value},
          {"source", source_name(s.source)},
          {"added_words", s.added_words},
          {"hits", s.hits}};
}

json refine_route(const ApiRequest& req, const TermNetwork& net, const ServiceConfig& cfg) {
  auto q = req.params.find("q");
  if (q == req.params.end() || q->second.find_first_not_of(" \t\r\n") == std::string::npos) {
    bad_request("parameter 'q' is required");
  }
  QueryMode mode = QueryMode::automatic;
  if (auto m = req.params.find("mode"); m != req.params.end()) {
    auto parsed = parse_query_mode(m->second);
    if (!parsed) bad_request("unknown mode '" + m->second + "'");
    mode = *parsed;
  }
  const int k = static_cast<int>(int_param(req, "k", std::min(2, cfg.max_k), 0, cfg.max_k));
  const auto limit_max = static_cast<long long>(cfg.suggestion_limit);
  const auto offset = static_cast<std::size_t>(int_param(req, "offset", 0, 0, 1'000'000'000));
  const auto limit = static_cast<std::size_t>(int_param(req, "limit", limit_max, 1, limit_max));

  Query query;
  try {
    query = Query::make(q->second, mode, k);
  } catch (const Error& e) {
    bad_request(e.what());
  }
  const auto suggestions = refine(query, net);
  json list = json::array();
  for (std::size_t i = offset; i < suggestions.size() && i < offset + limit; ++i) {
    list.push_back(suggestion_json(suggestions[i], net));
  }
  const auto resolved = resolve(query, net);
  return {{"query", q->second},
          {"words", join_words(query.words)},
          {"resolved", resolved ? json(term_ref(*resolved, net)) : json(nullptr)},
          {"mode", std::string(to_string(mode))},
          {"k", k},
          {"total", suggestions.size()},
          {"offset", offset},
          {"limit", limit},
          {"suggestions", std::move(list)}};
}

json neighbors_json(std::span<const Neighbor> neighbors, const TermNetwork& net) {
  json out = json::array();
  for (const auto& n : neighbors) {
    json ref = term_ref(n.term, net);
    ref["kind"] = std::string(to_string(n.kind));
    out.push_back(std::move(ref));
  }
  return out;
}

json term_route(TermId id, const TermNetwork& net) {
  const Term& t = net.term(id);
  return {{"id", id.value},
          {"words", join_words(t.words)},
          {"surfaces", t.surfaces},
          {"freq_occurrences", t.freq_occurrences},
          {"freq_docs", t.freq_docs},
          {"component", net.component_of(id).id.value},
          {"variants", neighbors_json(net.comp_neighbors(id), net)},
          {"head_expansions", neighbors_json(net.exp_r_neighbors(id), net)}};
}

json term_list_route(const ApiRequest& req, const TermNetwork& net, const ServiceConfig& cfg) {
  std::string prefix;
  if (auto p = req.params.find("prefix"); p != req.params.end()) prefix = fold_case(p->second);
  const auto limit_max = static_cast<long long>(cfg.suggestion_limit);
  const auto limit = static_cast<std::size_t>(int_param(req, "limit", limit_max, 1, limit_max));
  json list = json::array();
  std::size_t total = 0;
  for (const Term& t : net.inventory().terms()) {
    const std::string joined = join_words(t.words);
    if (joined.compare(0, prefix.size(), prefix) != 0) continue;
    if (total++ < limit) list.push_back(term_ref(t.id, net));
  }
  return {{"prefix", prefix}, {"total", total}, {"terms", std::move(list)}};
}

json component_route(const std::string& text, const TermNetwork& net) {
  auto value = parse_int(text);
  if (!value || *value < 0) bad_request("component id must be a non-negative integer");
  if (static_cast<unsigned long long>(*value) > UINT32_MAX) not_found("no component " + text);
  const ComponentId id{static_cast<std::uint32_t>(*value)};
  const Component* comp = nullptr;
  try {
    comp = &net.component(id);
  } catch (const Error&) {
    not_found("no component " + text);
  }
  json members = json::array();
  for (TermId m : comp->members) {
    json ref = term_ref(m, net);
    ref["degree"] = net.comp_degree(m);
    members.push_back(std::move(ref));
  }
  json edges = json::array();
  for (const auto& e : net.component_edges(id)) {
    edges.push_back({{"kind", std::string(to_string(e.kind))}, {"a", e.a.value}, {"b", e.b.value}});
  }
  return {{"id", id.value},
          {"label", term_ref(comp->label, net)},
          {"members", std::move(members)},
          {"edges", std::move(edges)}};
}

json document_route(const std::string& doc_id, const TermNetwork& net) {
  const DocumentInfo* info = net.find_document(doc_id);
  if (!info) not_found("no document '" + doc_id + "'");
  json terms = json::array();
  for (TermId id : net.terms_in_document(doc_id)) terms.push_back(term_ref(id, net));
  return {{"doc_id", info->doc_id},
          {"token_count", info->token_count},
          {"metadata", info->metadata},
          {"terms", std::move(terms)}};
}

json term_docs_route(TermId id, const ApiRequest& req, const TermNetwork& net,
                     const ServiceConfig& cfg) {
  const auto limit_max = static_cast<long long>(cfg.suggestion_limit);
  const auto limit = static_cast<std::size_t>(int_param(req, "limit", limit_max, 1, limit_max));
  const auto offset = static_cast<std::size_t>(int_param(req, "offset", 0, 0, 1'000'000'000));
  const auto hits = fetch_documents(id, net, offset + limit);
  json docs = json::array();
  for (std::size_t i = offset; i < hits.size(); ++i) {
    docs.push_back({{"doc_id", hits[i].doc_id}, {"count", hits[i].count}, {"metadata", hits[i].metadata}});
  }
  return {{"term", term_ref(id, net)},
          {"total", net.postings(id).size()},
          {"offset", offset},
          {"limit", limit},
          {"documents", std::move(docs)}};
}

json stats_route(const TermNetwork& net) {
  const BuildMeta& m = net.meta();
  json edges = json::object();
  for (const auto& [kind, count] : m.edge_counts) edges[std::string(to_string(kind))] = count;
  json sizes = json::object();
  for (const auto& [size, count] : m.component_sizes) sizes[std::to_string(size)] = count;
  return {{"documents", m.documents},
          {"noun_phrases", m.noun_phrases},
          {"terms", m.terms},
          {"edge_counts", std::move(edges)},
          {"orth_merges", m.orth_merges},
          {"components", m.components},
          {"mwt_candidates", m.mwt_candidates},
          {"component_sizes", std::move(sizes)},
          {"lexicon_source", m.lexicon_source},
          {"max_merge", m.config.max_merge},
          {"min_component_size", m.config.min_component_size}};
}

json dispatch(const ApiRequest& req, const TermNetwork& net, const ServiceConfig& cfg) {
  const auto parts = split_path(req.path);
  if (parts.empty() || parts[0] != "api") not_found("no route for " + req.path);
  const std::size_t n = parts.size();
  if (n == 2 && parts[1] == "health") {
    return {{"status", "ok"}, {"terms", net.inventory().size()}};
  }
  if (n == 2 && parts[1] == "stats") return stats_route(net);
  if (n == 2 && parts[1] == "refine") return refine_route(req, net, cfg);
  if (n == 2 && parts[1] == "terms") return term_list_route(req, net, cfg);
  if (n == 3 && parts[1] == "terms") return term_route(term_param(parts[2], net), net);
  if (n == 3 && parts[1] == "components") return component_route(parts[2], net);
  if (n == 3 && parts[1] == "docs") return document_route(parts[2], net);
  if (n == 4 && parts[1] == "term" && parts[3] == "docs") {
    return term_docs_route(term_param(parts[2], net), req, net, cfg);
  }
  not_found("no route for " + req.path);
}

ApiResponse envelope(int status, json data, json error) {
  const json body = {{"version", kApiVersion}, {"data", std::move(data)}, {"error", std::move(error)}};
  return {status, body.dump()};
}

}  // namespace

void ServiceConfig::validate() const {
  if (max_k < 0 || max_k > kMaxChainDepth) {
    throw Error(Errc::invalid_argument, "max_k must be within 0.." + std::to_string(kMaxChainDepth));
  }
  if (suggestion_limit < 1) throw Error(Errc::invalid_argument, "suggestion_limit must be at least 1");
  if (port < 0 || port > 65535) throw Error(Errc::invalid_argument, "port out of range");
}

std::shared_ptr<const TermNetwork> NetworkHolder::snapshot() const {
  std::lock_guard lock(mu_);
  return net_;
}

void NetworkHolder::replace(std::shared_ptr<const TermNetwork> net) {
  std::lock_guard lock(mu_);
  net_ = std::move(net);
}

ApiResponse handle_request(const ApiRequest& request, const TermNetwork& net,
                           const ServiceConfig& config) {
  try {
    return envelope(200, dispatch(request, net, config), nullptr);
  } catch (const HttpError& e) {
    return envelope(e.status, nullptr, {{"code", e.code}, {"message", e.message}});
  } catch (const std::exception& e) {
    return envelope(500, nullptr, {{"code", "internal"}, {"message", e.what()}});
  }
}

}  // namespace termgraph::service
