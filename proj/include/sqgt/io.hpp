// Bit-exact persistence: a human-diffable text format for 0/1 matrices and
// a JSON sidecar for scheme metadata.
#pragma once

#include <string>

#include "sqgt/core.hpp"

namespace sqgt {

struct SchemeFilePair {
  std::string matrix_path;
  std::string metadata_path;
};

/// PREFIX -> {PREFIX.matrix, PREFIX.json}
SchemeFilePair scheme_paths(const std::string& prefix);

/// Format: first line "rows cols"; then `rows` lines of '0'/'1' characters.
void save_matrix(const BinaryMatrix& m, const std::string& path);
BinaryMatrix load_matrix(const std::string& path);

void save_scheme(const Scheme& scheme, const SchemeFilePair& paths);
Scheme load_scheme(const SchemeFilePair& paths);

}  // namespace sqgt
