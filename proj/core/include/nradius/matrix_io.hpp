#pragma once

#include <string>

#include "nradius/matrix.hpp"

namespace nradius {

// JSON layout: {"dim": n, "entries": [[[re, im], ...], ...]} with entries in
// row-major order. Serialization uses shortest round-trip doubles, so
// parse(serialize(m)) reproduces m exactly.
std::string matrix_to_json(const CMatrix& m);

// Throws std::runtime_error on malformed JSON, wrong shapes, or non-finite
// values.
CMatrix matrix_from_json(const std::string& text);

CMatrix load_matrix_file(const std::string& path);
void save_matrix_file(const CMatrix& m, const std::string& path);

}  // namespace nradius
