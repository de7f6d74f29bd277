#include "core/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace rbnlab {

BitMatrix::BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix: empty dimensions");
    words_.assign((rows * cols + 63) / 64, 0);
}

uint64_t BitMatrix::count_ones() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::vector<uint8_t> flatten(const BitMatrix& m) {
    std::vector<uint8_t> out(m.bit_count());
    for (size_t i = 0; i < out.size(); ++i) out[i] = m.get_flat(i) ? 1 : 0;
    return out;
}

} // namespace rbnlab
