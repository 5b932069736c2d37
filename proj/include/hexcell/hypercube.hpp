#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hexcell/word.hpp"

namespace hexcell {

// Exhaustive sweeps index hypercube vertices by integers: bit j of the
// vertex id is coordinate j+1 of the word. Only supported up to n = 29
// (2^29 vertices), the desk-scale ceiling of every exhaustive check here.
inline constexpr int kMaxExhaustiveDimension = 29;

uint64_t vertex_from_word(const Word& w);
Word word_from_vertex(int n, uint64_t v);
uint64_t vertex_count(int n);  // 2^n, throws UsageError past the exhaustive ceiling

// Visits the C(n,r) words at distance exactly r from x, each once, in
// lexicographic order of the flipped-coordinate set. r > n is a usage error.
void for_sphere(const Word& x, int r, const std::function<void(const Word&)>& visit);
std::vector<Word> sphere(const Word& x, int r);

// Common-neighbor parameters of H^n: adjacent vertices share 0 neighbors,
// non-adjacent vertices share 0 or 2. Requires n >= 2.
std::pair<int, int> common_neighbor_profile(int n);

}  // namespace hexcell
