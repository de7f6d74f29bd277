#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rbnlab {

// Dense 0/1 matrix with bits packed row-major into 64-bit words (LSB first).
// The storage is one flat bit run, so the row-major flattening used by the
// sequence measures is just the natural bit order. Unused tail bits of the
// last word are kept at zero, which makes operator== a plain word compare.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t bit_count() const { return rows_ * cols_; }

    bool get(size_t r, size_t c) const { return get_flat(r * cols_ + c); }
    void set(size_t r, size_t c, bool v) { set_flat(r * cols_ + c, v); }

    bool get_flat(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set_flat(size_t i, bool v) {
        uint64_t mask = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    uint64_t count_ones() const;

    bool operator==(const BitMatrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint64_t> words_;
};

// Row-major 0/1 byte sequence of the whole matrix.
std::vector<uint8_t> flatten(const BitMatrix& m);

} // namespace rbnlab
