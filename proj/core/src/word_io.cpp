#include "cocycle/word_io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cocycle/mat2.hpp"

namespace cocycle {

MatrixWord load_word(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw word_io_error("cannot open word file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw word_io_error("invalid JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("word")) {
    throw word_io_error(path + ": expected an object with a \"word\" key");
  }
  const auto& entries = doc["word"];
  if (!entries.is_array() || entries.empty()) {
    throw word_io_error(path +
                        ": \"word\" must be a non-empty array of matrices");
  }
  std::vector<Mat2> letters;
  letters.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || row.size() != 4) {
      throw word_io_error(path + ": entry " + std::to_string(i) +
                          " must be an array [a, b, c, d] of four numbers");
    }
    double v[4];
    for (std::size_t j = 0; j < 4; ++j) {
      if (!row[j].is_number()) {
        throw word_io_error(path + ": entry " + std::to_string(i) +
                            " has a non-numeric component");
      }
      v[j] = row[j].get<double>();
    }
    try {
      letters.emplace_back(v[0], v[1], v[2], v[3]);
    } catch (const std::invalid_argument& e) {
      throw word_io_error(path + ": entry " + std::to_string(i) + ": " +
                          e.what());
    }
  }
  return MatrixWord(std::move(letters));
}

void save_word(const std::string& path, const MatrixWord& word) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Mat2& m = word.letter(i);
    entries.push_back({m.a(), m.b(), m.c(), m.d()});
  }
  nlohmann::json doc;
  doc["word"] = std::move(entries);
  std::ofstream out(path);
  if (!out) {
    throw word_io_error("cannot open word file for writing: " + path);
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw word_io_error("failed writing word file: " + path);
  }
}

}  // namespace cocycle
