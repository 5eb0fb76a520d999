#pragma once

#include <stdexcept>

namespace senti {

// Bad flags, impossible option combinations, unreadable input paths.
// The CLI maps these to exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input data (corpus records, lexicon
// lines, model files). Also exit code 2: the user can fix the file.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace senti
