#pragma once

// Versioned JSON tensor files. Schema "curvature2k/1":
// { "schema": "curvature2k/1", "n": <int>, "basis": "lex-wedge2",
//   "matrix": [[...], ...] }   (N2 x N2 wedge matrix, row-major)
// Unknown fields are rejected so archived counterexample files cannot
// drift silently; doubles round-trip bit-exactly.

#include <string>

#include "curvature2k/curvature.hpp"

namespace c2k {

inline constexpr const char* kSchemaVersion = "curvature2k/1";

std::string to_json(const AlgebraicCurvature& r);
AlgebraicCurvature curvature_from_json(const std::string& text);

void save_curvature(const std::string& path, const AlgebraicCurvature& r);
AlgebraicCurvature load_curvature(const std::string& path);

}  // namespace c2k
