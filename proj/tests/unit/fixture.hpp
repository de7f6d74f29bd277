#pragma once

#include <string>

#include "core/measures.hpp"
#include "core/network.hpp"

namespace rbnlab::testfix {

// Four nodes, two inputs each: XOR(1,2), AND(2,3), XNOR(0,3), OR(0,1).
// Worked by hand: every state drains into the single 3-cycle 3 -> 12 -> 9,
// basin 16, longest transient 5.
inline BooleanNetwork xor_and_xnor_or() {
    BooleanNetwork net;
    net.params.n_nodes = 4;
    net.params.in_degree = 2;
    net.wiring = {1, 2, 2, 3, 0, 3, 0, 1};
    net.truth = {0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1};
    return net;
}

inline constexpr uint32_t kFixtureSuccessor[16] = {2, 0, 10, 12, 11, 9, 3, 5,
                                                   1, 3, 9,  15, 9, 11, 1, 7};
inline constexpr uint32_t kFixtureTransient[16] = {3, 4, 2, 0, 5, 1, 1, 2,
                                                   5, 0, 1, 4, 0, 5, 5, 3};

// Complete side-1 square table; makes 2D block decomposition hand-computable:
// bdm = 1 + log2(#zeros) + 2 + log2(#ones) for mixed matrices.
inline CtmTable unit_square_table() {
    CtmTable t;
    t.shape = BlockShape::Square;
    t.size = 1;
    t.entries = {{"0", 1.0}, {"1", 2.0}};
    t.fallback = 3.0;
    return t;
}

// Complete side-2 square table keyed on popcount, values 2..6.
inline CtmTable popcount_square_table() {
    CtmTable t;
    t.shape = BlockShape::Square;
    t.size = 2;
    for (uint32_t b = 0; b < 16; ++b) {
        std::string key;
        int ones = 0;
        for (uint32_t i = 0; i < 4; ++i) {
            int bit = (b >> i) & 1;
            key.push_back(char('0' + bit));
            ones += bit;
        }
        t.entries[key] = 2.0 + ones;
    }
    t.fallback = 7.0;
    return t;
}

inline std::string temp_path(const std::string& name) { return "/tmp/rbnlab_test_" + name; }

} // namespace rbnlab::testfix
