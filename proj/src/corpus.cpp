#include "senti/corpus.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace senti {

namespace {

using nlohmann::json;

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

LabeledDoc doc_from_json(const json& j, std::size_t line_no) {
  const auto line = std::to_string(line_no);
  if (!j.is_object()) throw data_error("line " + line + ": expected a JSON object");

  for (const char* key : {"id", "text"}) {
    if (!j.contains(key) || !j[key].is_string())
      throw data_error("line " + line + ": missing or non-string \"" + key + "\"");
  }
  const std::string id = j["id"].get<std::string>();
  if (id.empty()) throw data_error("line " + line + ": empty id");

  for (const char* key : {"pos", "neg"}) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw data_error("doc \"" + id + "\": missing or non-integer \"" + key + "\"");
  }

  const std::string text = j["text"].get<std::string>();
  if (is_blank(text)) throw data_error("doc \"" + id + "\": text is empty");

  LabeledDoc doc{id, text, PosStrength(1), NegStrength(-1), {}, {}};
  try {
    doc.pos = PosStrength(j["pos"].get<int>());
    doc.neg = NegStrength(j["neg"].get<int>());
  } catch (const data_error& e) {
    throw data_error("doc \"" + id + "\": " + e.what());
  }

  if (j.contains("timestamp")) {
    if (!j["timestamp"].is_string())
      throw data_error("doc \"" + id + "\": non-string \"timestamp\"");
    doc.timestamp = j["timestamp"].get<std::string>();
    try {
      utc_date(doc.timestamp);
    } catch (const data_error& e) {
      throw data_error("doc \"" + id + "\": " + e.what());
    }
  }
  if (j.contains("entity")) {
    if (!j["entity"].is_string() || j["entity"].get<std::string>().empty())
      throw data_error("doc \"" + id + "\": \"entity\" must be a non-empty string");
    doc.entity = j["entity"].get<std::string>();
  }
  return doc;
}

}  // namespace

Corpus parse_corpus(const std::string& content) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || is_blank(line)) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw data_error("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    LabeledDoc doc = doc_from_json(j, line_no);
    if (!seen_ids.insert(doc.id).second)
      throw data_error("duplicate doc id \"" + doc.id + "\" (line " + std::to_string(line_no) + ")");
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_corpus(buf.str());
  } catch (const data_error& e) {
    throw data_error(path + ": " + e.what());
  }
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.docs) {
    json j;
    j["id"] = doc.id;
    j["text"] = doc.text;
    j["pos"] = doc.pos.value();
    j["neg"] = doc.neg.value();
    if (!doc.timestamp.empty()) j["timestamp"] = doc.timestamp;
    if (!doc.entity.empty()) j["entity"] = doc.entity;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open corpus file for writing: " + path);
  out << serialize_corpus(corpus);
  if (!out) throw data_error("I/O failure writing corpus file: " + path);
}

namespace {

// Howard Hinnant's civil-date algorithms.
long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

UtcDate civil_from_days(long z) {
  z += 719468;
  const long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const long y = static_cast<long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return UtcDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int days_in_month(int y, int m) {
  static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2) {
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    return leap ? 29 : 28;
  }
  return lengths[m - 1];
}

bool read_digits(const std::string& s, std::size_t& i, int count, int& out) {
  out = 0;
  for (int k = 0; k < count; ++k) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = out * 10 + (s[i] - '0');
    ++i;
  }
  return true;
}

bool expect(const std::string& s, std::size_t& i, char c) {
  if (i >= s.size() || s[i] != c) return false;
  ++i;
  return true;
}

}  // namespace

std::string to_string(const UtcDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

UtcDate utc_date(const std::string& iso8601) {
  const auto fail = [&]() -> data_error {
    return data_error("invalid ISO-8601 timestamp: \"" + iso8601 + "\"");
  };

  std::size_t i = 0;
  int year, month, day;
  if (!read_digits(iso8601, i, 4, year) || !expect(iso8601, i, '-') ||
      !read_digits(iso8601, i, 2, month) || !expect(iso8601, i, '-') ||
      !read_digits(iso8601, i, 2, day))
    throw fail();
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) throw fail();

  long seconds = days_from_civil(year, month, day) * 86400L;

  if (i < iso8601.size()) {
    if (!expect(iso8601, i, 'T')) throw fail();
    int hh, mm, ss = 0;
    if (!read_digits(iso8601, i, 2, hh) || !expect(iso8601, i, ':') || !read_digits(iso8601, i, 2, mm))
      throw fail();
    if (i < iso8601.size() && iso8601[i] == ':') {
      ++i;
      if (!read_digits(iso8601, i, 2, ss)) throw fail();
    }
    if (hh > 23 || mm > 59 || ss > 59) throw fail();
    seconds += hh * 3600L + mm * 60L + ss;

    if (i < iso8601.size()) {
      const char z = iso8601[i];
      if (z == 'Z') {
        ++i;
      } else if (z == '+' || z == '-') {
        ++i;
        int oh, om;
        if (!read_digits(iso8601, i, 2, oh) || !expect(iso8601, i, ':') || !read_digits(iso8601, i, 2, om))
          throw fail();
        if (oh > 23 || om > 59) throw fail();
        const long offset = oh * 3600L + om * 60L;
        seconds += (z == '+') ? -offset : offset;
      } else {
        throw fail();
      }
    }
  }
  if (i != iso8601.size()) throw fail();

  long days = seconds / 86400L;
  if (seconds < 0 && seconds % 86400L != 0) --days;
  return civil_from_days(days);
}

}  // namespace senti
