#pragma once

#include <stdexcept>
#include <string>

#include "cocycle/words.hpp"

namespace cocycle {

// Raised when a word file is missing, malformed, or holds an entry that is
// not a valid unit-determinant matrix.  The message names the offending
// entry where applicable.
class word_io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File format: a JSON object {"word": [[a, b, c, d], ...]} with one or more
// row-major 2x2 entries, each of determinant one.
MatrixWord load_word(const std::string& path);

void save_word(const std::string& path, const MatrixWord& word);

}  // namespace cocycle
