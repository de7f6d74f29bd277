#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bit_matrix.hpp"
#include "core/rng.hpp"

namespace rbnlab {

enum class WiringDist { Uniform, Binomial };

struct RbnParams {
    uint32_t n_nodes = 0;
    uint32_t in_degree = 0;
    double bias = 0.5;                          // probability of a 1 in each truth-table entry
    WiringDist wiring = WiringDist::Uniform;
    double wiring_p = 0.5;                      // Binomial success probability per trial
};

// Synchronous Boolean network with fixed in-degree. wiring holds k source
// indices per node (row-major); truth holds 2^k output bits per node. A
// node's table is indexed big-endian: the first wired input is the most
// significant bit of the index.
struct BooleanNetwork {
    RbnParams params;
    std::vector<uint32_t> wiring; // n_nodes * in_degree
    std::vector<uint8_t> truth;   // n_nodes * 2^in_degree, values 0/1

    uint32_t input(uint32_t node, uint32_t slot) const {
        return wiring[size_t(node) * params.in_degree + slot];
    }
    uint8_t table(uint32_t node, uint32_t idx) const {
        return truth[(size_t(node) << params.in_degree) + idx];
    }
};

void validate_params(const RbnParams& p);

// Wiring entries drawn per (node, slot). Uniform: next_below(n_nodes).
// Binomial: sum of n_nodes-1 Bernoulli(wiring_p) trials, one draw each.
std::vector<uint32_t> generate_wiring(const RbnParams& p, RngStream& rng);

// One Bernoulli(bias) draw per table bit, node-major then index order.
std::vector<uint8_t> generate_truth_tables(const RbnParams& p, RngStream& rng);

// Wiring and truth tables from substreams of one master seed (stream_role
// wiring / truth_tables), so the same seed always names the same network.
BooleanNetwork generate_network(const RbnParams& p, uint64_t master_seed);

// Fair-coin state of n bits.
std::vector<uint8_t> random_state(uint32_t n_nodes, RngStream& rng);

// One synchronous update. in and out must hold n_nodes bits; they may not alias.
void step(const BooleanNetwork& net, const uint8_t* in, uint8_t* out);

// Trajectory as a bit matrix: row 0 is the initial state, `steps` rows total,
// each later row the successor of the one above it.
BitMatrix evolve(const BooleanNetwork& net, const std::vector<uint8_t>& initial, uint32_t steps);

enum class Regime { Ordered, Critical, Chaotic };

// Annealed-approximation criterion: 2 k p (1-p) against 1.
Regime classify_regime(uint32_t k, double p, double tol = 1e-12);

struct CriticalPair { double low = 0, high = 0; };

// Roots of 2 k p (1-p) = 1; defined for k >= 2.
CriticalPair theoretical_critical_p(uint32_t k);

// Text fixture: "N k" header, N wiring lines, N truth-table bit strings.
void save_network(const BooleanNetwork& net, const std::string& path);
BooleanNetwork load_network(const std::string& path);

} // namespace rbnlab
