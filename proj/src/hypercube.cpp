#include "hexcell/hypercube.hpp"

#include <numeric>

namespace hexcell {

uint64_t vertex_from_word(const Word& w) {
    if (w.dimension() > kMaxExhaustiveDimension)
        throw UsageError("vertex ids only cover n <= " + std::to_string(kMaxExhaustiveDimension));
    return w.low_bits();
}

Word word_from_vertex(int n, uint64_t v) {
    if (n > kMaxExhaustiveDimension)
        throw UsageError("vertex ids only cover n <= " + std::to_string(kMaxExhaustiveDimension));
    return Word::from_bits(n, v);
}

uint64_t vertex_count(int n) {
    if (n < 1 || n > kMaxExhaustiveDimension)
        throw UsageError("exhaustive enumeration supports 1 <= n <= " +
                         std::to_string(kMaxExhaustiveDimension));
    return uint64_t{1} << n;
}

void for_sphere(const Word& x, int r, const std::function<void(const Word&)>& visit) {
    const int n = x.dimension();
    if (r < 0 || r > n) throw UsageError("sphere radius must satisfy 0 <= r <= n");
    if (r == 0) {
        visit(x);
        return;
    }
    // Lexicographic r-subsets of {1..n} as flipped-coordinate sets.
    std::vector<int> coords(static_cast<size_t>(r));
    std::iota(coords.begin(), coords.end(), 1);
    for (;;) {
        Word y = x;
        for (int c : coords) y.flip_bit(c);
        visit(y);
        int i = r - 1;
        while (i >= 0 && coords[static_cast<size_t>(i)] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++coords[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            coords[static_cast<size_t>(j)] = coords[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Word> sphere(const Word& x, int r) {
    std::vector<Word> out;
    for_sphere(x, r, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::pair<int, int> common_neighbor_profile(int n) {
    if (n < 2) throw UsageError("common_neighbor_profile requires n >= 2");
    return {0, 2};
}

}  // namespace hexcell
