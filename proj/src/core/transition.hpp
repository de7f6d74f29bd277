#pragma once

#include <cstdint>
#include <vector>

#include "core/bit_matrix.hpp"
#include "core/network.hpp"

namespace rbnlab {

// Successor map over all 2^N network states. State index is the node values
// read as a big-endian integer: node 0 is the most significant bit.
struct TransitionGraph {
    uint32_t n_nodes = 0;
    std::vector<uint32_t> succ;

    size_t state_count() const { return succ.size(); }
};

TransitionGraph build_transition_graph(const BooleanNetwork& net, uint32_t max_nodes = 20);

struct AttractorInfo {
    // Each cycle rotated so its smallest state comes first; cycles sorted by that state.
    std::vector<std::vector<uint32_t>> attractors;
    std::vector<uint32_t> attractor_of; // per state
    std::vector<uint32_t> transient_len; // per state, 0 on a cycle
    std::vector<uint64_t> basin_size;   // per attractor, includes the cycle itself
    uint32_t max_transient = 0;
};

AttractorInfo find_attractors(const TransitionGraph& g);

struct PrestigeResult {
    std::vector<double> score; // L2-normalized, nonnegative
    bool converged = false;
    uint32_t iterations = 0;
};

// Power iteration on incoming edges: each state hands its mass to its successor.
PrestigeResult prestige_scores(const TransitionGraph& g, uint32_t max_iter = 1000,
                               double tol = 1e-10);

// Square 0/1 matrix with row u marking its successor column.
BitMatrix adjacency_matrix(const TransitionGraph& g);

} // namespace rbnlab
