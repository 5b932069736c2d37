#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hexcell/hypercube.hpp"

namespace hexcell {

/// One bit per vertex of H^n, the storage for cells and vertex sets in
/// exhaustive sweeps. Unused bits of the last block are kept zero.
class VertexBitmap {
public:
    VertexBitmap() = default;
    explicit VertexBitmap(int n);

    int dimension() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }

    bool test(uint64_t v) const { return blocks_[v >> 6] >> (v & 63) & 1; }
    void set(uint64_t v) { blocks_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(uint64_t v) { blocks_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    uint64_t count() const;
    bool none() const;
    bool intersects(const VertexBitmap& other) const;

    VertexBitmap& operator|=(const VertexBitmap& other);
    VertexBitmap& operator&=(const VertexBitmap& other);
    VertexBitmap& subtract(const VertexBitmap& other);  // this &= ~other
    VertexBitmap complement_set() const;                // all vertices not in the set

    bool operator==(const VertexBitmap& other) const = default;

    // The image {v ^ t : v in set}; XOR-translation is a hypercube automorphism.
    VertexBitmap translated_xor(uint64_t t) const;

    // Union of neighbor sets: {v ^ e_k : v in set, 1 <= k <= n}.
    VertexBitmap neighbor_union() const;

    void for_each_set(const std::function<void(uint64_t)>& visit) const;
    std::vector<uint64_t> sorted_ids() const;
    std::optional<uint64_t> first_set() const;

    const std::vector<uint64_t>& blocks() const { return blocks_; }
    std::vector<uint64_t>& blocks() { return blocks_; }

private:
    int n_ = 0;
    std::vector<uint64_t> blocks_;
};

// Vertices whose id has even popcount (the parity class of the all-zero word).
VertexBitmap even_parity_bitmap(int n);

}  // namespace hexcell
