#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "hexcell/errors.hpp"

namespace hexcell {

inline constexpr int kMaxDimension = 512;

/// A binary word of fixed length n, the vertex type of the hypercube H^n.
/// Coordinate 1 is the leftmost character of the text form and the least
/// significant bit of limb 0, so for n <= 64 a word is a single machine
/// word; larger n (up to 512) spill into further limbs.
class Word {
public:
    static constexpr int kLimbs = kMaxDimension / 64;

    Word() = default;

    // All-zero word of the given dimension.
    explicit Word(int n) : n_(check_dim(n)) {}

    // n <= 64 fast path: bit j of `bits` is coordinate j+1.
    static Word from_bits(int n, uint64_t bits);

    // Text form: '0'/'1' characters, coordinate 1 leftmost.
    static Word parse(std::string_view text);
    std::string text() const;

    int dimension() const { return n_; }
    int limb_count() const { return (n_ + 63) / 64; }
    const std::array<uint64_t, kLimbs>& limbs() const { return limbs_; }

    bool bit(int coord) const;        // 1-based coordinate
    void set_bit(int coord, bool v);  // 1-based coordinate
    void flip_bit(int coord);

    int weight() const;
    uint64_t low_bits() const { return limbs_[0]; }

    Word operator^(const Word& other) const;

    // Text-lexicographic order (coordinate 1 most significant).
    bool operator==(const Word& other) const = default;
    bool operator<(const Word& other) const;

private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDimension)
            throw UsageError("word dimension must be in [1, " + std::to_string(kMaxDimension) +
                             "], got " + std::to_string(n));
        return n;
    }

    int16_t n_ = 0;
    std::array<uint64_t, kLimbs> limbs_{};
};

enum class ParityClass { Even, Odd };

// Hamming distance; throws UsageError on dimension mismatch.
int distance(const Word& x, const Word& y);

// Flip every bit (translation by the all-one word).
Word complement(const Word& x);

// Even iff the word has even weight; the all-zero word is Even.
ParityClass parity(const Word& x);

Word all_zero(int n);
Word all_one(int n);

}  // namespace hexcell
