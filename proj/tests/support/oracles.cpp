#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace termgraph::testing::oracle {

bool contiguous(const Seq& outer, const Seq& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i + inner.size() <= outer.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < inner.size(); ++j) match = match && outer[i + j] == inner[j];
    if (match) return true;
  }
  return false;
}

bool subsequence(const Seq& outer, const Seq& inner) {
  // O(n*m) table: can inner[0..j) be matched inside outer[0..i)
  std::vector<std::vector<bool>> ok(outer.size() + 1, std::vector<bool>(inner.size() + 1, false));
  for (std::size_t i = 0; i <= outer.size(); ++i) ok[i][0] = true;
  for (std::size_t i = 1; i <= outer.size(); ++i) {
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      ok[i][j] = ok[i - 1][j] || (outer[i - 1] == inner[j - 1] && ok[i - 1][j - 1]);
    }
  }
  return ok[outer.size()][inner.size()];
}

static bool ends_with(const Seq& l, const Seq& s) {
  return s.size() <= l.size() && std::equal(s.rbegin(), s.rend(), l.rbegin());
}

static bool starts_with(const Seq& l, const Seq& s) {
  return s.size() <= l.size() && std::equal(s.begin(), s.end(), l.begin());
}

bool exp_l(const Seq& s, const Seq& l) { return l.size() > s.size() && ends_with(l, s); }

bool exp_r(const Seq& s, const Seq& l) {
  return l.size() > s.size() && starts_with(l, s) && !ends_with(l, s);
}

bool ins(const Seq& s, const Seq& l) {
  if (s.empty() || l.size() <= s.size()) return false;
  if (s.front() != l.front() || s.back() != l.back()) return false;
  return subsequence(l, s) && !starts_with(l, s) && !ends_with(l, s);
}

bool lr_exp(const Seq& i, const Seq& o) { return o.size() > i.size() && contiguous(o, i); }

bool sub_syn(const Seq& a, const Seq& b, const std::set<std::pair<std::string, std::string>>& lex) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (diff.size() != 1) return false;
  const auto& x = a[diff[0]];
  const auto& y = b[diff[0]];
  return lex.contains({x, y}) || lex.contains({y, x});
}

namespace {

const std::set<std::string>& invariant_words() {
  static const std::set<std::string> words = {
      "series", "species", "news", "physics", "mathematics", "economics", "statistics",
      "genetics", "diabetes", "rabies", "herpes", "lens", "gas", "bias", "this", "thus",
      "yes", "always", "perhaps", "whereas", "its", "has", "was", "does", "is"};
  return words;
}

const std::map<std::string, std::string>& irregular() {
  static const std::map<std::string, std::string> table = {
      {"data", "datum"},       {"criteria", "criterion"},   {"phenomena", "phenomenon"},
      {"children", "child"},   {"men", "man"},              {"women", "woman"},
      {"feet", "foot"},        {"teeth", "tooth"},          {"mice", "mouse"},
      {"analyses", "analysis"}, {"hypotheses", "hypothesis"}, {"theses", "thesis"},
      {"diagnoses", "diagnosis"}};
  return table;
}

std::string strip_plural(std::string w) {
  for (;;) {
    std::string next = w;
    const auto n = w.size();
    auto ends = [&](const char* suf) {
      const std::string s(suf);
      return n >= s.size() && w.compare(n - s.size(), s.size(), s) == 0;
    };
    if (invariant_words().contains(w)) {
      return w;
    } else if (irregular().contains(w)) {
      next = irregular().at(w);
    } else if (n > 4 && ends("ies")) {
      next = w.substr(0, n - 3) + "y";
    } else if (n > 4 && (ends("sses") || ends("xes") || ends("zes") || ends("ches") || ends("shes"))) {
      next = w.substr(0, n - 2);
    } else if (n > 3 && ends("s") && !ends("ss") && !ends("us") && !ends("is")) {
      next = w.substr(0, n - 1);
    }
    if (next == w) return w;
    w = next;
  }
}

}  // namespace

Seq normalize(const Seq& raw) {
  Seq out;
  for (const auto& token : raw) {
    std::string piece;
    auto flush = [&] {
      if (!piece.empty()) out.push_back(strip_plural(piece));
      piece.clear();
    };
    for (char c : token) {
      if (c == '-' || c == '/') {
        flush();
      } else {
        piece += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
      }
    }
    flush();
  }
  return out;
}

bool orth(const Seq& raw_a, const Seq& raw_b) {
  return raw_a != raw_b && !normalize(raw_a).empty() && normalize(raw_a) == normalize(raw_b);
}

std::vector<VariationEdge> all_pairs_edges(const TermInventory& inv,
                                           const std::set<std::pair<std::string, std::string>>& lex) {
  std::vector<VariationEdge> out;
  for (const Term& a : inv.terms()) {
    for (const Term& b : inv.terms()) {
      if (a.id == b.id) continue;
      if (a.id < b.id && sub_syn(a.words, b.words, lex)) out.push_back({RelationKind::sub_syn, a.id, b.id});
      if (ins(a.words, b.words)) out.push_back({RelationKind::ins, a.id, b.id});
      if (exp_l(a.words, b.words)) out.push_back({RelationKind::exp_l, a.id, b.id});
      if (exp_r(a.words, b.words)) out.push_back({RelationKind::exp_r, a.id, b.id});
      if (lr_exp(a.words, b.words)) out.push_back({RelationKind::lr_exp, a.id, b.id});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<TermId>> union_find_components(std::size_t nodes,
                                                       const std::vector<VariationEdge>& edges) {
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (!in_comp(e.kind)) continue;
    auto ra = find(e.a.index());
    auto rb = find(e.b.index());
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<TermId>> groups;
  for (std::size_t i = 0; i < nodes; ++i) groups[find(i)].push_back(TermId{static_cast<std::uint32_t>(i)});
  std::vector<std::vector<TermId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

TermId scan_label(const std::vector<TermId>& members, const std::vector<VariationEdge>& edges,
                  const TermInventory& inv) {
  std::set<TermId> inside(members.begin(), members.end());
  std::map<TermId, std::set<TermId>> neighbours;
  for (const auto& e : edges) {
    if (!in_comp(e.kind) || !inside.contains(e.a) || !inside.contains(e.b) || e.a == e.b) continue;
    neighbours[e.a].insert(e.b);
    neighbours[e.b].insert(e.a);
  }
  TermId best = members.front();
  for (TermId m : members) {
    const auto dm = neighbours[m].size();
    const auto db = neighbours[best].size();
    if (dm > db || (dm == db && inv.at(m).words < inv.at(best).words)) best = m;
  }
  return best;
}

std::map<TermId, int> bfs(const TermNetwork& net, TermId start, int k) {
  std::map<TermId, std::set<TermId>> adj;
  for (const auto& e : net.edges()) {
    if (!in_comp(e.kind)) continue;
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  std::map<TermId, int> dist{{start, 0}};
  std::deque<TermId> queue{start};
  while (!queue.empty()) {
    TermId x = queue.front();
    queue.pop_front();
    if (dist[x] == k) continue;
    for (TermId y : adj[x]) {
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace termgraph::testing::oracle
