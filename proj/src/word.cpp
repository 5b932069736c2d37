#include "hexcell/word.hpp"

#include <bit>

namespace hexcell {

Word Word::from_bits(int n, uint64_t bits) {
    Word w(n);
    if (n < 64 && (bits >> n) != 0)
        throw UsageError("from_bits: bits beyond dimension " + std::to_string(n));
    w.limbs_[0] = bits;
    return w;
}

Word Word::parse(std::string_view text) {
    if (text.empty()) throw UsageError("cannot parse an empty word");
    Word w(static_cast<int>(text.size()));
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '1')
            w.limbs_[i / 64] |= uint64_t{1} << (i % 64);
        else if (c != '0')
            throw UsageError("word text must consist of '0'/'1' characters");
    }
    return w;
}

std::string Word::text() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (limbs_[i / 64] >> (i % 64) & 1) s[static_cast<size_t>(i)] = '1';
    return s;
}

bool Word::bit(int coord) const {
    if (coord < 1 || coord > n_) throw UsageError("coordinate out of range");
    int i = coord - 1;
    return limbs_[i / 64] >> (i % 64) & 1;
}

void Word::set_bit(int coord, bool v) {
    if (coord < 1 || coord > n_) throw UsageError("coordinate out of range");
    int i = coord - 1;
    if (v)
        limbs_[i / 64] |= uint64_t{1} << (i % 64);
    else
        limbs_[i / 64] &= ~(uint64_t{1} << (i % 64));
}

void Word::flip_bit(int coord) { set_bit(coord, !bit(coord)); }

int Word::weight() const {
    int w = 0;
    for (int i = 0; i < limb_count(); ++i) w += std::popcount(limbs_[i]);
    return w;
}

Word Word::operator^(const Word& other) const {
    if (n_ != other.n_) throw UsageError("dimension mismatch in word xor");
    Word out(n_);
    for (int i = 0; i < limb_count(); ++i) out.limbs_[i] = limbs_[i] ^ other.limbs_[i];
    return out;
}

namespace {

uint64_t bit_reverse64(uint64_t x) {
    x = (x & 0x5555555555555555ull) << 1 | (x >> 1 & 0x5555555555555555ull);
    x = (x & 0x3333333333333333ull) << 2 | (x >> 2 & 0x3333333333333333ull);
    x = (x & 0x0f0f0f0f0f0f0f0full) << 4 | (x >> 4 & 0x0f0f0f0f0f0f0f0full);
    x = (x & 0x00ff00ff00ff00ffull) << 8 | (x >> 8 & 0x00ff00ff00ff00ffull);
    x = (x & 0x0000ffff0000ffffull) << 16 | (x >> 16 & 0x0000ffff0000ffffull);
    return x << 32 | x >> 32;
}

}  // namespace

bool Word::operator<(const Word& other) const {
    // Text-lex order: coordinate 1 (LSB of limb 0) is the most significant.
    int la = limb_count(), lb = other.limb_count();
    for (int i = 0; i < std::max(la, lb); ++i) {
        uint64_t a = i < la ? bit_reverse64(limbs_[i]) : 0;
        uint64_t b = i < lb ? bit_reverse64(other.limbs_[i]) : 0;
        if (a != b) return a < b;
    }
    return n_ < other.n_;
}

int distance(const Word& x, const Word& y) {
    if (x.dimension() != y.dimension())
        throw UsageError("distance requires words of equal dimension");
    int d = 0;
    for (int i = 0; i < x.limb_count(); ++i)
        d += std::popcount(x.limbs()[i] ^ y.limbs()[i]);
    return d;
}

Word complement(const Word& x) {
    Word out = x;
    for (int c = 1; c <= x.dimension(); ++c) out.set_bit(c, !x.bit(c));
    return out;
}

ParityClass parity(const Word& x) {
    return x.weight() % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
}

Word all_zero(int n) { return Word(n); }

Word all_one(int n) { return complement(Word(n)); }

}  // namespace hexcell
