#include "senti/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "senti/utf8.hpp"

namespace senti {

std::string_view reserved_token(EmoticonClass cls) {
  switch (cls) {
    case EmoticonClass::positive: return kEmoPositive;
    case EmoticonClass::negative: return kEmoNegative;
    case EmoticonClass::other: return kEmoOther;
  }
  return kEmoOther;
}

bool is_reserved_token(std::string_view token) {
  return token == kEmoPositive || token == kEmoNegative || token == kEmoOther;
}

void EmoticonMap::add(std::string literal, EmoticonClass cls) {
  if (literal.empty()) throw data_error("emoticon literal must be non-empty");
  const auto [it, inserted] = entries_.emplace(std::move(literal), cls);
  if (!inserted) throw data_error("duplicate emoticon literal: \"" + it->first + "\"");
  by_length_.clear();
  for (const auto& entry : entries_) by_length_.push_back(&entry);
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [](const auto* a, const auto* b) { return a->first.size() > b->first.size(); });
}

const std::pair<const std::string, EmoticonClass>* EmoticonMap::match(std::string_view text,
                                                                      std::size_t pos) const {
  for (const auto* entry : by_length_) {
    const std::string& key = entry->first;
    if (key.size() <= text.size() - pos && text.compare(pos, key.size(), key) == 0) return entry;
  }
  return nullptr;
}

EmoticonMap EmoticonMap::builtin() {
  EmoticonMap map;
  for (const char* lit : {":)", ":-)", ":))", ":D", ":-D", "=)", ";)", ";-)", ":]", "<3", "xD"})
    map.add(lit, EmoticonClass::positive);
  for (const char* lit : {":(", ":-(", ":((", ":'(", "=(", "D:", ":[", "</3"})
    map.add(lit, EmoticonClass::negative);
  for (const char* lit : {":P", ":-P", ":o", ":O", ":|", ":-/", "o_O"})
    map.add(lit, EmoticonClass::other);
  return map;
}

EmoticonMap EmoticonMap::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open emoticon map file: " + path);
  EmoticonMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw data_error(path + ": line " + std::to_string(line_no) + ": expected <literal><TAB><class>");
    const std::string literal = line.substr(0, tab);
    const std::string cls = line.substr(tab + 1);
    EmoticonClass parsed;
    if (cls == "pos") parsed = EmoticonClass::positive;
    else if (cls == "neg") parsed = EmoticonClass::negative;
    else if (cls == "other") parsed = EmoticonClass::other;
    else
      throw data_error(path + ": line " + std::to_string(line_no) + ": unknown class \"" + cls + "\"");
    try {
      map.add(literal, parsed);
    } catch (const data_error& e) {
      throw data_error(path + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return map;
}

std::string replace_emoticons(std::string_view text, const EmoticonMap& map) {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    if (const auto* hit = map.match(text, i)) {
      if (!out.empty() && !std::isspace(static_cast<unsigned char>(out.back()))) out.push_back(' ');
      out += reserved_token(hit->second);
      out.push_back(' ');
      i += hit->first.size();
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

namespace {

char32_t lower_codepoint(char32_t cp, LowercaseMode mode) {
  if (cp == U'I') return mode == LowercaseMode::turkish ? 0x131 : U'i';  // I -> ı
  if (cp == 0x130) return U'i';                                          // İ -> i
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1 uppercase
  if (cp == 0x178) return 0xFF;                                  // Ÿ -> ÿ
  // Latin Extended-A upper/lower pairs
  if ((cp >= 0x100 && cp <= 0x137 && cp % 2 == 0) ||
      (cp >= 0x139 && cp <= 0x147 && cp % 2 == 1) ||
      (cp >= 0x14A && cp <= 0x177 && cp % 2 == 0) ||
      (cp >= 0x179 && cp <= 0x17D && cp % 2 == 1))
    return cp + 1;
  return cp;
}

bool is_punct_codepoint(char32_t cp) {
  if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB: case 0xBF:
      return true;
    default:
      break;
  }
  // general punctuation: dashes, quotes, ellipsis, bullets, primes
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
}

bool has_prefix_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

bool is_url_chunk(std::string_view chunk) {
  return has_prefix_ci(chunk, "http://") || has_prefix_ci(chunk, "https://") ||
         has_prefix_ci(chunk, "www.");
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

}  // namespace

std::string lowercase(std::string_view text, LowercaseMode mode) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t before = i;
    const char32_t cp = utf8::decode(text, i);
    if (cp == utf8::kInvalid) {
      out += text.substr(before, i - before);
    } else {
      utf8::append(out, lower_codepoint(cp, mode));
    }
  }
  return out;
}

std::string suffix_strip(std::string_view token) {
  if (is_reserved_token(token)) return std::string(token);

  struct Suffix {
    std::string_view text;
    int codepoints;
  };
  // ordered by codepoint length; the longest match is the only candidate
  static constexpr Suffix kSuffixes[] = {
      {"ler", 3}, {"lar", 3}, {"den", 3}, {"dan", 3},
      {"im", 2},  {"ım", 2}, {"um", 2}, {"üm", 2}, {"de", 2}, {"da", 2},
      {"e", 1},   {"a", 1},   {"i", 1},  {"ı", 1},  {"u", 1},  {"ü", 1},
  };

  for (const auto& suffix : kSuffixes) {
    if (token.size() > suffix.text.size() && token.ends_with(suffix.text)) {
      const auto stem = token.substr(0, token.size() - suffix.text.size());
      if (utf8::length(stem) >= 3) return std::string(stem);
      return std::string(token);
    }
  }
  return std::string(token);
}

Tokenizer::Tokenizer(PipelineConfig config)
    : config_(std::move(config)),
      emoticons_(config_.emoticon_map_path.empty() ? EmoticonMap::builtin()
                                                   : EmoticonMap::load(config_.emoticon_map_path)) {}

TokenStream Tokenizer::run(std::string_view text) const {
  const std::string replaced = replace_emoticons(text, emoticons_);

  TokenStream out;
  for (const auto chunk : split_whitespace(replaced)) {
    if (config_.strip_urls && is_url_chunk(chunk)) continue;
    if (config_.strip_mentions && chunk.starts_with('@')) continue;
    if (is_reserved_token(chunk)) {
      out.emplace_back(chunk);
      continue;
    }

    const std::string lowered = lowercase(chunk, config_.lowercase_mode);

    std::string separated;
    separated.reserve(lowered.size());
    std::size_t i = 0;
    while (i < lowered.size()) {
      const std::size_t before = i;
      const char32_t cp = utf8::decode(lowered, i);
      if (cp != utf8::kInvalid && is_punct_codepoint(cp)) {
        separated.push_back(' ');
      } else {
        separated += lowered.substr(before, i - before);
      }
    }

    for (const auto piece : split_whitespace(separated)) {
      if (config_.stemmer == StemmerKind::suffix_stripper) {
        out.push_back(suffix_strip(piece));
      } else {
        out.emplace_back(piece);
      }
    }
  }
  return out;
}

std::string Tokenizer::normalize_token(std::string_view word) const {
  if (is_reserved_token(word)) return std::string(word);
  std::string lowered = lowercase(word, config_.lowercase_mode);
  if (config_.stemmer == StemmerKind::suffix_stripper) return suffix_strip(lowered);
  return lowered;
}

TokenStream tokenize(std::string_view text, const PipelineConfig& config) {
  return Tokenizer(config).run(text);
}

}  // namespace senti
