#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace joinscout {

// String similarity primitives. Every score is in [0, 1].

/// Decodes UTF-8 into code points; invalid bytes map to U+FFFD.
std::u32string decode_utf8(std::string_view text);

/// Lowercases ASCII, collapses every run of non-alphanumeric characters to a
/// single space and trims. Non-ASCII code points count as alphanumeric.
std::u32string normalize_text(std::string_view text);

/// Normalized text with its space-separated tokens sorted lexicographically.
/// Precompute this when one value is compared many times.
std::u32string token_sort_key(std::string_view text);

/// Identifier tokens: split on lower-to-upper camelCase boundaries and on any
/// non-alphanumeric character (underscore included), then lowercased.
std::vector<std::string> name_tokens(std::string_view name);

/// Ratcliff/Obershelp gestalt ratio 2*M/(|a|+|b|) on lowercased input, where
/// M sums the recursively found longest matching blocks (leftmost in `a`,
/// then leftmost in `b`, on ties). Two empty strings score 1.
double gestalt_ratio(std::string_view a, std::string_view b);

/// 2*LCS(a,b)/(|a|+|b|) over code points. Two empty strings score 1.
double indel_ratio(std::string_view a, std::string_view b);
double indel_ratio(std::u32string_view a, std::u32string_view b);

/// indel_ratio of the token-sorted normalized forms.
double token_sort_ratio(std::string_view a, std::string_view b);

/// Overlap coefficient |A∩B| / min(|A|,|B|) of name_tokens; 0 when either
/// side has no tokens.
double token_overlap(std::string_view a, std::string_view b);

using Embedding = std::vector<double>;

/// Text embedding used for semantic similarity. Implementations must be
/// deterministic and return vectors of exactly `dimension()` entries.
class SemanticProvider {
 public:
  virtual ~SemanticProvider() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual Embedding embed(std::string_view text) const = 0;
};

inline constexpr std::size_t kTrigramBuckets = 256;

/// Character trigram counts of the normalized string, hashed (FNV-1a over the
/// trigram's UTF-8 bytes) into 256 buckets and L2-normalized. Inputs shorter
/// than three normalized characters give the zero vector.
Embedding trigram_embed(std::string_view text);

class TrigramProvider final : public SemanticProvider {
 public:
  std::string name() const override { return "trigram"; }
  std::size_t dimension() const override { return kTrigramBuckets; }
  Embedding embed(std::string_view text) const override { return trigram_embed(text); }
};

/// Maps identifier tokens to concept labels through a term lexicon and embeds
/// the bag of concepts (hashed into 256 buckets, L2-normalized). Tokens not in
/// the lexicon stand for themselves, so `clinic_name` and `hospital_name`
/// coincide when both `clinic` and `hospital` map to the same concept.
class LexiconProvider final : public SemanticProvider {
 public:
  using Lexicon = std::map<std::string, std::string, std::less<>>;

  LexiconProvider();  // uses default_lexicon()
  explicit LexiconProvider(Lexicon lexicon);

  static const Lexicon& default_lexicon();

  std::string name() const override { return "lexicon"; }
  std::size_t dimension() const override { return kTrigramBuckets; }
  Embedding embed(std::string_view text) const override;

  const Lexicon& lexicon() const { return lexicon_; }

 private:
  Lexicon lexicon_;
};

/// Builds a provider by name ("lexicon" or "trigram"). Throws ConfigError.
std::unique_ptr<SemanticProvider> make_provider(std::string_view name);

/// Cosine similarity clamped to [0, 1]; 0 when either vector is zero.
double cosine(const Embedding& a, const Embedding& b);

/// Cosine of the provider's embeddings of `a` and `b`. Throws ProviderError if
/// the provider returns a vector of the wrong dimension.
double semantic_sim(std::string_view a, std::string_view b, const SemanticProvider& provider);

}  // namespace joinscout
