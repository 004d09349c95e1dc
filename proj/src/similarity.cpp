#include "joinscout/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "joinscout/errors.hpp"

namespace joinscout {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_ascii_alnum(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

bool is_alnum(char32_t c) { return c >= 0x80 || is_ascii_alnum(c); }

char32_t ascii_lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::uint32_t fnv1a32(std::string_view bytes) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

void l2_normalize(Embedding& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm == 0.0) return;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

// Longest common block of a[alo,ahi) and b[blo,bhi): leftmost in a, then in b.
struct Block {
  std::size_t i, j, size;
};

Block longest_block(std::u32string_view a, std::size_t alo, std::size_t ahi,
                    std::u32string_view b, std::size_t blo, std::size_t bhi,
                    std::vector<std::size_t>& prev, std::vector<std::size_t>& cur) {
  Block best{alo, blo, 0};
  std::fill(prev.begin() + blo, prev.begin() + bhi + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    cur[blo] = 0;
    for (std::size_t j = blo; j < bhi; ++j) {
      // cur[j+1] = length of common run ending at a[i], b[j]
      const std::size_t k = a[i] == b[j] ? prev[j] + 1 : 0;
      cur[j + 1] = k;
      if (k > best.size) best = {i + 1 - k, j + 1 - k, k};
    }
    std::swap(prev, cur);
  }
  return best;
}

std::size_t lcs_length(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (char32_t ca : a) {
    std::size_t diag = 0;  // row[j] of the previous iteration of a
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = ca == b[j] ? diag + 1 : std::max(up, row[j]);
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto c0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (c0 < 0x80) {
      len = 1;
      cp = c0;
    } else if ((c0 & 0xE0) == 0xC0) {
      len = 2;
      cp = c0 & 0x1F;
    } else if ((c0 & 0xF0) == 0xE0) {
      len = 3;
      cp = c0 & 0x0F;
    } else if ((c0 & 0xF8) == 0xF0) {
      len = 4;
      cp = c0 & 0x07;
    }
    bool ok = len > 0 && i + len <= text.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto ck = static_cast<unsigned char>(text[i + k]);
      if ((ck & 0xC0) != 0x80) ok = false;
      cp = (cp << 6) | (ck & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::u32string normalize_text(std::string_view text) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : decode_utf8(text)) {
    if (is_alnum(c)) {
      if (pending_space && !out.empty()) out.push_back(U' ');
      pending_space = false;
      out.push_back(ascii_lower(c));
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::u32string token_sort_key(std::string_view text) {
  const std::u32string norm = normalize_text(text);
  std::vector<std::u32string_view> tokens;
  std::u32string_view rest(norm);
  while (!rest.empty()) {
    const auto sp = rest.find(U' ');
    tokens.push_back(rest.substr(0, sp));
    if (sp == std::u32string_view::npos) break;
    rest.remove_prefix(sp + 1);
  }
  std::sort(tokens.begin(), tokens.end());
  std::u32string out;
  out.reserve(norm.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(U' ');
    out.append(tokens[i]);
  }
  return out;
}

std::vector<std::string> name_tokens(std::string_view name) {
  std::vector<std::string> tokens;
  std::string current;
  char32_t prev = 0;
  for (char32_t c : decode_utf8(name)) {
    if (!is_alnum(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      const bool camel = prev >= U'a' && prev <= U'z' && c >= U'A' && c <= U'Z';
      if (camel && !current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      append_utf8(current, ascii_lower(c));
    }
    prev = c;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double gestalt_ratio(std::string_view a_text, std::string_view b_text) {
  std::u32string a = decode_utf8(a_text);
  std::u32string b = decode_utf8(b_text);
  for (auto& c : a) c = ascii_lower(c);
  for (auto& c : b) c = ascii_lower(c);
  const std::size_t total = a.size() + b.size();
  if (total == 0) return 1.0;

  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::size_t matched = 0;
  struct Range {
    std::size_t alo, ahi, blo, bhi;
  };
  std::vector<Range> pending{{0, a.size(), 0, b.size()}};
  while (!pending.empty()) {
    const Range r = pending.back();
    pending.pop_back();
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    const Block blk = longest_block(a, r.alo, r.ahi, b, r.blo, r.bhi, prev, cur);
    if (blk.size == 0) continue;
    matched += blk.size;
    pending.push_back({r.alo, blk.i, r.blo, blk.j});
    pending.push_back({blk.i + blk.size, r.ahi, blk.j + blk.size, r.bhi});
  }
  return 2.0 * static_cast<double>(matched) / static_cast<double>(total);
}

double indel_ratio(std::u32string_view a, std::u32string_view b) {
  const std::size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  if (a == b) return 1.0;
  return 2.0 * static_cast<double>(lcs_length(a, b)) / static_cast<double>(total);
}

double indel_ratio(std::string_view a, std::string_view b) {
  return indel_ratio(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

double token_sort_ratio(std::string_view a, std::string_view b) {
  return indel_ratio(std::u32string_view(token_sort_key(a)), std::u32string_view(token_sort_key(b)));
}

double token_overlap(std::string_view a, std::string_view b) {
  const auto ta = name_tokens(a);
  const auto tb = name_tokens(b);
  const std::set<std::string> sa(ta.begin(), ta.end());
  const std::set<std::string> sb(tb.begin(), tb.end());
  if (sa.empty() || sb.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& t : sa) common += sb.count(t);
  return static_cast<double>(common) / static_cast<double>(std::min(sa.size(), sb.size()));
}

Embedding trigram_embed(std::string_view text) {
  Embedding v(kTrigramBuckets, 0.0);
  const std::u32string norm = normalize_text(text);
  if (norm.size() < 3) return v;
  std::string gram;
  for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
    gram.clear();
    for (std::size_t k = 0; k < 3; ++k) append_utf8(gram, norm[i + k]);
    v[fnv1a32(gram) % kTrigramBuckets] += 1.0;
  }
  l2_normalize(v);
  return v;
}

const LexiconProvider::Lexicon& LexiconProvider::default_lexicon() {
  static const Lexicon lexicon = [] {
    // concept -> terms
    const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
        {"facility", {"clinic", "hospital", "infirmary", "facility"}},
        {"drug", {"drug", "medication", "medicine", "med", "pharmaceutical"}},
        {"physician", {"doctor", "physician", "practitioner"}},
        {"date", {"date", "day"}},
        {"address", {"address", "addr", "location"}},
        {"phone", {"phone", "telephone", "tel", "hotline"}},
        {"quantity", {"quantity", "qty"}},
        {"postcode", {"zip", "postcode", "postal"}},
    };
    Lexicon out;
    for (const auto& [concept_label, terms] : groups) {
      for (const auto& t : terms) out.emplace(t, concept_label);
    }
    return out;
  }();
  return lexicon;
}

LexiconProvider::LexiconProvider() : lexicon_(default_lexicon()) {}

LexiconProvider::LexiconProvider(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

Embedding LexiconProvider::embed(std::string_view text) const {
  Embedding v(kTrigramBuckets, 0.0);
  auto tokens = name_tokens(text);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  for (const auto& token : tokens) {
    auto it = lexicon_.find(token);
    const std::string& concept_label = it == lexicon_.end() ? token : it->second;
    v[fnv1a32("c:" + concept_label) % kTrigramBuckets] += 1.0;
  }
  l2_normalize(v);
  return v;
}

std::unique_ptr<SemanticProvider> make_provider(std::string_view name) {
  if (name == "lexicon") return std::make_unique<LexiconProvider>();
  if (name == "trigram") return std::make_unique<TrigramProvider>();
  throw ConfigError("unknown semantic provider '" + std::string(name) + "'");
}

double cosine(const Embedding& a, const Embedding& b) {
  if (a.size() != b.size()) throw ProviderError("embedding dimensions differ");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  if (a == b) return 1.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

double semantic_sim(std::string_view a, std::string_view b, const SemanticProvider& provider) {
  const Embedding ea = provider.embed(a);
  const Embedding eb = provider.embed(b);
  if (ea.size() != provider.dimension() || eb.size() != provider.dimension())
    throw ProviderError("provider '" + provider.name() + "' returned an embedding of the wrong dimension");
  for (double x : ea)
    if (!std::isfinite(x)) throw ProviderError("provider '" + provider.name() + "' returned a non-finite value");
  for (double x : eb)
    if (!std::isfinite(x)) throw ProviderError("provider '" + provider.name() + "' returned a non-finite value");
  return cosine(ea, eb);
}

}  // namespace joinscout
