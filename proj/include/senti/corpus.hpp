#pragma once

#include <string>
#include <vector>

#include "senti/error.hpp"

namespace senti {

/// Positive sentiment strength, an integer in [1, 5]. 1 means the text
/// carries no positive sentiment.
class PosStrength {
 public:
  explicit PosStrength(int value) : value_(value) {
    if (value < 1 || value > 5)
      throw data_error("positive strength out of range [1,5]: " + std::to_string(value));
  }
  int value() const { return value_; }
  friend bool operator==(PosStrength, PosStrength) = default;

 private:
  int value_;
};

/// Negative sentiment strength, stored signed in [-5, -1]. -1 means the
/// text carries no negative sentiment. Classifier-facing code works on
/// magnitude() so both scales share the same 1..5 class shape.
class NegStrength {
 public:
  explicit NegStrength(int value) : value_(value) {
    if (value < -5 || value > -1)
      throw data_error("negative strength out of range [-5,-1]: " + std::to_string(value));
  }
  int value() const { return value_; }
  int magnitude() const { return -value_; }
  friend bool operator==(NegStrength, NegStrength) = default;

 private:
  int value_;
};

struct LabeledDoc {
  std::string id;
  std::string text;
  PosStrength pos;
  NegStrength neg;
  std::string timestamp;  // ISO-8601, empty when absent
  std::string entity;     // empty when absent

  friend bool operator==(const LabeledDoc&, const LabeledDoc&) = default;
};

struct Corpus {
  std::vector<LabeledDoc> docs;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Reads a UTF-8 JSON-lines corpus file. Each line is one object with keys
/// `id`, `text`, `pos` (1..5), `neg` (-5..-1) and optional `timestamp`,
/// `entity`. Throws data_error naming the line or id on any malformed or
/// invariant-violating record; throws config_error when the file cannot be
/// opened.
Corpus load_corpus(const std::string& path);

void save_corpus(const Corpus& corpus, const std::string& path);

// In-memory forms of the same format, shared by loaders and tests.
Corpus parse_corpus(const std::string& content);
std::string serialize_corpus(const Corpus& corpus);

/// Calendar date in UTC.
struct UtcDate {
  int year = 0;
  int month = 0;
  int day = 0;

  friend bool operator==(const UtcDate&, const UtcDate&) = default;
  friend auto operator<=>(const UtcDate&, const UtcDate&) = default;
};

std::string to_string(const UtcDate& d);  // YYYY-MM-DD

/// Parses an ISO-8601 date or date-time (`YYYY-MM-DD[THH:MM[:SS]][Z|+HH:MM]`)
/// and returns the UTC calendar date it falls on. Throws data_error on any
/// unparseable or out-of-range input.
UtcDate utc_date(const std::string& iso8601);

}  // namespace senti
