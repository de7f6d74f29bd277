#pragma once

#include <cstdint>
#include <vector>

#include "core/bit_matrix.hpp"
#include "core/measures.hpp"
#include "core/transition.hpp"

namespace rbnlab {

// Returns a copy with row `node` and column `node` zeroed; the node stays in
// place so the matrix shape, and with it the block decomposition baseline, is
// unchanged.
BitMatrix disconnect_node(const BitMatrix& adjacency, uint32_t node);

// Returns a copy with row and column `node` deleted (side shrinks by one).
BitMatrix remove_node(const BitMatrix& adjacency, uint32_t node);

struct RelativeChange {
    double entropy = 0;
    double lzw = 0;
    double bdm = 0;
    // a zero baseline leaves that ratio undefined; flagged, not fatal
    bool entropy_valid = true;
    bool lzw_valid = true;
    bool bdm_valid = true;
};

// Per measure: (before - after) / before.
RelativeChange relative_randomness_change(const RandomnessReport& before,
                                          const RandomnessReport& after);

enum class AidClass {
    ContainedInDescription,
    CausalNeutral,
    InformationLoss,
    FundamentalOrNoise,
};

const char* aid_class_name(AidClass c);

// Bands around L = log2(n_vertices): |aid| under (1-tol)L is contained in the
// graph's description, within the band is neutral, above it up to n_vertices
// is information loss, beyond n_vertices fundamental or noise (the sign of
// aid itself separates those two readings).
AidClass classify_aid(double aid, uint64_t n_vertices, double band_tolerance = 0.1);

enum class PerturbMode { MostRelevant, LeastRelevant };

// How a node is taken out of the diagram for one trial. Isolate zeroes its
// row and column in place; Remove deletes them, shrinking the matrix, which
// shifts the block grid and so lets block counting react to single-node edits
// that leave symbol frequencies almost unchanged.
enum class DisconnectMode { Remove, Isolate };

struct PerturbationRecord {
    uint32_t node = 0;
    double prestige = 0;
    RandomnessReport before; // pristine baseline, identical across records
    RandomnessReport after;
    RelativeChange relative;
    double aid = 0; // before.bdm - after.bdm
    AidClass classification = AidClass::ContainedInDescription;
};

struct PerturbationSeries {
    PerturbMode mode = PerturbMode::MostRelevant;
    DisconnectMode disconnect = DisconnectMode::Remove;
    RandomnessReport baseline;
    std::vector<PerturbationRecord> records;
};

// Rank states by prestige (descending for MostRelevant, ascending otherwise,
// ties by ascending state id), then for each of the first `count` states
// measure the diagram with that state taken out. Every trial starts from the
// pristine adjacency, so the diagram is untouched afterwards.
PerturbationSeries perturbation_series(const TransitionGraph& diagram, const CtmTable& table,
                                       PerturbMode mode, uint32_t count = 20,
                                       DisconnectMode disconnect = DisconnectMode::Remove);

} // namespace rbnlab
