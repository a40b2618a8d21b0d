#pragma once

#include <cstdint>
#include <string>

#include "lipsel/space.hpp"

namespace lipsel {

enum class CorpusKind { HalfPlanes, Polygons, Rects, Line1d };

CorpusKind corpus_kind_from_string(const std::string& s);  // throws on unknown

struct GenOptions {
  std::size_t max_edges = 6;     // polygons: edges per target in [3, max_edges]
  double duplicate_prob = 0.0;   // chance that a point repeats an earlier one (rho = 0 pairs)
};

// Deterministic for a given (kind, n, seed, options) on every platform.
Instance generate(CorpusKind kind, std::size_t n, std::uint64_t seed, const GenOptions& opt = {});

}  // namespace lipsel
