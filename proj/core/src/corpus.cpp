#include "termgraph/corpus.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

namespace termgraph {
namespace {

struct PosName {
  Pos pos;
  std::string_view name;
};

constexpr PosName kPosNames[] = {
    {Pos::noun, "NOUN"}, {Pos::propn, "PROPN"}, {Pos::adj, "ADJ"},
    {Pos::verb_ing, "VERB_ING"}, {Pos::det, "DET"}, {Pos::prep, "PREP"},
    {Pos::conj, "CONJ"}, {Pos::num, "NUM"}, {Pos::other, "OTHER"},
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_directive(std::string_view line, std::string_view name) {
  return line.starts_with(name) && (line.size() == name.size() || is_space(line[name.size()]));
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(Errc::malformed_record, "line " + std::to_string(line) + ": " + what, line);
}

std::size_t codepoints(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

TaggedToken parse_token(std::string_view text, const TagMap& tags, std::size_t line) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      parts.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  auto joined = [&](std::size_t count) {
    // parts[0..count) re-joined with '/'
    std::size_t len = 0;
    for (std::size_t i = 0; i < count; ++i) len += parts[i].size() + (i ? 1 : 0);
    return std::string(text.substr(0, len));
  };
  const std::size_t n = parts.size();
  TaggedToken tok;
  if (n >= 3 && tags.lookup(parts[n - 2])) {
    tok.surface = joined(n - 2);
    tok.pos = *tags.lookup(parts[n - 2]);
    tok.lemma = std::string(parts[n - 1]);
  } else if (n >= 2 && tags.lookup(parts[n - 1])) {
    tok.surface = joined(n - 1);
    tok.pos = *tags.lookup(parts[n - 1]);
    tok.lemma = tok.surface;
  } else {
    malformed(line, "token '" + std::string(text) + "' has no known tag");
  }
  if (tok.surface.empty()) malformed(line, "token '" + std::string(text) + "' has an empty surface");
  if (tok.lemma.empty()) malformed(line, "token '" + std::string(text) + "' has an empty lemma");
  return tok;
}

bool is_content(const TaggedToken& t) {
  switch (t.pos) {
    case Pos::noun:
    case Pos::propn:
    case Pos::adj:
    case Pos::verb_ing:
      return codepoints(t.surface) > 1;
    default:
      return false;
  }
}

bool is_head_capable(const TaggedToken& t) {
  return (t.pos == Pos::noun || t.pos == Pos::propn) && is_content(t);
}

Words lemmas_of(std::span<const TaggedToken> tokens) {
  Words out;
  for (const auto& t : tokens) {
    Words pieces = normalize_word(t.lemma);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

std::string surface_of(std::span<const TaggedToken> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

}  // namespace

std::string_view to_string(Pos pos) noexcept {
  for (const auto& p : kPosNames) {
    if (p.pos == pos) return p.name;
  }
  return "OTHER";
}

std::optional<Pos> parse_coarse_pos(std::string_view name) noexcept {
  for (const auto& p : kPosNames) {
    if (p.name == name) return p.pos;
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> Document::sentence_range(std::size_t i) const {
  const std::size_t first = sentence_starts.at(i);
  const std::size_t last = i + 1 < sentence_starts.size() ? sentence_starts[i + 1] : tokens.size();
  return {first, last};
}

std::size_t Document::sentence_of(std::size_t token_index) const {
  auto it = std::upper_bound(sentence_starts.begin(), sentence_starts.end(), token_index);
  return it == sentence_starts.begin() ? 0
                                       : static_cast<std::size_t>(it - sentence_starts.begin()) - 1;
}

// ---------------------------------------------------------------- TagMap

TagMap TagMap::builtin() {
  TagMap map;
  for (const auto& p : kPosNames) map.set(std::string(p.name), p.pos);
  const std::pair<std::string_view, Pos> penn[] = {
      {"NN", Pos::noun},   {"NNS", Pos::noun},    {"NNP", Pos::propn}, {"NNPS", Pos::propn},
      {"JJ", Pos::adj},    {"JJR", Pos::adj},     {"JJS", Pos::adj},   {"VBG", Pos::verb_ing},
      {"DT", Pos::det},    {"PDT", Pos::det},     {"WDT", Pos::det},   {"IN", Pos::prep},
      {"TO", Pos::prep},   {"CC", Pos::conj},     {"CD", Pos::num},    {"VB", Pos::other},
      {"VBD", Pos::other}, {"VBN", Pos::other},   {"VBP", Pos::other}, {"VBZ", Pos::other},
      {"MD", Pos::other},  {"PRP", Pos::other},   {"PRP$", Pos::other}, {"RB", Pos::other},
      {"RBR", Pos::other}, {"RBS", Pos::other},   {"RP", Pos::other},  {"EX", Pos::other},
      {"FW", Pos::other},  {"LS", Pos::other},    {"POS", Pos::other}, {"SYM", Pos::other},
      {"UH", Pos::other},  {"WP", Pos::other},    {"WP$", Pos::other}, {"WRB", Pos::other},
      {",", Pos::other},   {".", Pos::other},     {":", Pos::other},   {"``", Pos::other},
      {"''", Pos::other},  {"-LRB-", Pos::other}, {"-RRB-", Pos::other}, {"#", Pos::other},
      {"$", Pos::other},
  };
  for (const auto& [tag, pos] : penn) map.set(std::string(tag), pos);
  return map;
}

TagMap TagMap::load(std::istream& in) {
  TagMap map;
  for (const auto& p : kPosNames) map.set(std::string(p.name), p.pos);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      malformed(line_no, "tag map lines need exactly two tab-separated columns");
    }
    const auto input = trim(std::string_view(line).substr(0, tab));
    const auto coarse = trim(std::string_view(line).substr(tab + 1));
    auto pos = parse_coarse_pos(coarse);
    if (input.empty() || !pos) {
      malformed(line_no, "unknown coarse tag '" + std::string(coarse) + "'");
    }
    map.set(std::string(input), *pos);
  }
  return map;
}

std::optional<Pos> TagMap::lookup(std::string_view tag) const {
  auto it = entries_.find(std::string(tag));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TagMap::set(std::string tag, Pos pos) { entries_[std::move(tag)] = pos; }

// ---------------------------------------------------------------- parsing

std::vector<Document> parse_corpus(std::istream& in, const TagMap& tags,
                                   const ParseLimits& limits) {
  std::vector<Document> docs;
  std::set<std::string, std::less<>> seen_ids;
  Document* current = nullptr;
  bool in_body = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() > limits.max_line_bytes) malformed(line_no, "line exceeds the byte limit");
    const std::string_view view = line;
    if (trim(view).empty()) {
      current = nullptr;
      continue;
    }
    if (is_directive(view, "#DOC")) {
      if (current) malformed(line_no, "missing blank line before #DOC");
      const auto id = trim(view.substr(4));
      if (id.empty() || split_ws(id).size() != 1) malformed(line_no, "#DOC needs a single id");
      if (seen_ids.contains(id)) malformed(line_no, "duplicate doc_id '" + std::string(id) + "'");
      if (docs.size() >= limits.max_documents) malformed(line_no, "document limit exceeded");
      seen_ids.emplace(id);
      docs.push_back(Document{std::string(id), {}, {}, {}});
      current = &docs.back();
      in_body = false;
      continue;
    }
    if (!current) malformed(line_no, "content outside a #DOC block");
    if (is_directive(view, "#META")) {
      if (in_body) malformed(line_no, "#META after sentence lines");
      const auto kv = trim(view.substr(5));
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos || eq == 0) malformed(line_no, "#META needs key=value");
      current->metadata[std::string(kv.substr(0, eq))] = std::string(kv.substr(eq + 1));
      continue;
    }
    in_body = true;
    current->sentence_starts.push_back(current->tokens.size());
    for (auto tok : split_ws(view)) {
      current->tokens.push_back(parse_token(tok, tags, line_no));
    }
    if (current->tokens.size() > limits.max_tokens_per_document) {
      malformed(line_no, "token limit exceeded for document '" + current->doc_id + "'");
    }
  }
  if (docs.empty()) throw Error(Errc::empty_corpus, "corpus contains no documents");
  return docs;
}

// ---------------------------------------------------------------- chunking

std::vector<NounPhraseSpan> chunk_simplex(const Document& doc) {
  std::vector<NounPhraseSpan> spans;
  const auto& toks = doc.tokens;
  for (std::size_t s = 0; s < doc.sentence_count(); ++s) {
    const auto [first, last] = doc.sentence_range(s);
    std::size_t i = first;
    while (i < last) {
      const std::size_t body = toks[i].pos == Pos::det ? i + 1 : i;
      std::size_t run_end = body;
      std::optional<std::size_t> last_head;
      while (run_end < last && is_content(toks[run_end])) {
        if (is_head_capable(toks[run_end])) last_head = run_end;
        ++run_end;
      }
      if (!last_head) {
        ++i;
        continue;
      }
      const std::size_t end = *last_head + 1;
      const std::span<const TaggedToken> content(toks.data() + body, end - body);
      Words words = lemmas_of(content);
      if (!words.empty()) {
        spans.push_back(NounPhraseSpan{doc.doc_id, i, end, std::move(words),
                                       surface_of(content), false});
      }
      i = end;
    }
  }
  return spans;
}

std::vector<NounPhraseSpan> chunk_complex(const Document& doc,
                                          std::span<const NounPhraseSpan> spans,
                                          const ComplexNpConfig& config) {
  const auto& toks = doc.tokens;
  auto linked = [&](const NounPhraseSpan& a, const NounPhraseSpan& b) {
    if (a.end >= b.start) return false;
    if (doc.sentence_of(a.start) != doc.sentence_of(b.end - 1)) return false;
    const auto& of = toks[a.end];
    if (of.pos != Pos::prep || fold_case(of.surface) != "of") return false;
    const std::size_t gap = b.start - a.end;
    return gap == 1 || (gap == 2 && toks[a.end + 1].pos == Pos::det);
  };

  std::vector<NounPhraseSpan> out(spans.begin(), spans.end());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    Words words = spans[i].words;
    std::size_t j = i;
    for (std::size_t merged = 0; merged < config.max_merge && j + 1 < spans.size() &&
                                 linked(spans[j], spans[j + 1]);
         ++merged) {
      ++j;
      words.insert(words.end(), spans[j].words.begin(), spans[j].words.end());
      const std::size_t lead = toks[spans[i].start].pos == Pos::det ? 1 : 0;
      const std::size_t from = spans[i].start + lead;
      out.push_back(NounPhraseSpan{
          doc.doc_id, spans[i].start, spans[j].end, words,
          surface_of(std::span<const TaggedToken>(toks.data() + from, spans[j].end - from)),
          true});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.start, a.end) < std::pair(b.start, b.end);
  });
  return out;
}

std::vector<NounPhraseSpan> extract_noun_phrases(const Document& doc,
                                                 const ComplexNpConfig& config) {
  const auto simplex = chunk_simplex(doc);
  return chunk_complex(doc, simplex, config);
}

}  // namespace termgraph
