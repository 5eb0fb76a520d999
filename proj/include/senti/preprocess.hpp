#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "senti/error.hpp"

namespace senti {

enum class EmoticonClass { positive, negative, other };

// Reserved tokens are lowercase and survive every pipeline stage; natural
// words can never produce them because punctuation removal destroys
// literal underscores.
inline constexpr std::string_view kEmoPositive = "__emo_pos__";
inline constexpr std::string_view kEmoNegative = "__emo_neg__";
inline constexpr std::string_view kEmoOther = "__emo_other__";

std::string_view reserved_token(EmoticonClass cls);
bool is_reserved_token(std::string_view token);

/// Emoticon literal -> sentiment class. Matching is longest-match-first at
/// every position, so a short key can never shadow a longer one.
class EmoticonMap {
 public:
  void add(std::string literal, EmoticonClass cls);
  const std::map<std::string, EmoticonClass>& entries() const { return entries_; }

  /// Longest key matching at `text[pos]`, or nullptr.
  const std::pair<const std::string, EmoticonClass>* match(std::string_view text,
                                                           std::size_t pos) const;

  /// ~25 common Western emoticons split across the three classes.
  static EmoticonMap builtin();

  /// One entry per line: `<literal><TAB><pos|neg|other>`, `#` comments.
  static EmoticonMap load(const std::string& path);

 private:
  std::map<std::string, EmoticonClass> entries_;
  std::vector<const std::pair<const std::string, EmoticonClass>*> by_length_;  // longest first
};

enum class LowercaseMode { turkish, simple };
enum class StemmerKind { none, suffix_stripper };

struct PipelineConfig {
  LowercaseMode lowercase_mode = LowercaseMode::turkish;
  bool strip_urls = true;
  bool strip_mentions = true;
  StemmerKind stemmer = StemmerKind::none;
  std::string emoticon_map_path;  // empty -> builtin map
};

using TokenStream = std::vector<std::string>;

/// Replaces every maximal emoticon occurrence with its class's reserved
/// token. The token is set off by single spaces: one is inserted before it
/// unless the output already ends in whitespace, and one always follows.
/// All other text is copied unchanged.
std::string replace_emoticons(std::string_view text, const EmoticonMap& map);

/// Lowercases UTF-8 text. Turkish mode applies the Turkish case rules
/// (I -> dotless i, dotted I -> i); simple mode maps both to plain i.
/// Covers ASCII, Latin-1 Supplement and Latin Extended-A.
std::string lowercase(std::string_view text, LowercaseMode mode);

/// Strips one layer of common Turkish inflectional suffixes: plural
/// -ler/-lar, possessive -im/-ım/-um/-üm, case endings -de/-da/-den/-dan/
/// -e/-a/-i/-ı/-u/-ü. The longest matching suffix is the only candidate;
/// it is removed when the remaining stem keeps >= 3 codepoints, otherwise
/// the token is returned unchanged. Reserved emoticon tokens are exempt.
std::string suffix_strip(std::string_view token);

/// Full pipeline with a pre-resolved emoticon map: emoticon replacement,
/// URL and mention stripping, lowercasing, punctuation-to-separator,
/// whitespace split, optional per-token stemming.
class Tokenizer {
 public:
  explicit Tokenizer(PipelineConfig config);

  TokenStream run(std::string_view text) const;

  /// Lowercase + optional stem for a single word that is already a token
  /// (lexicon entries, seed lists). Reserved tokens pass through.
  std::string normalize_token(std::string_view word) const;

  const PipelineConfig& config() const { return config_; }
  const EmoticonMap& emoticons() const { return emoticons_; }

 private:
  PipelineConfig config_;
  EmoticonMap emoticons_;
};

TokenStream tokenize(std::string_view text, const PipelineConfig& config);

}  // namespace senti
