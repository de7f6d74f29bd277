#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "core/measures.hpp"

namespace rbnlab {

// Transition entry of a small binary-alphabet Turing machine.
// next < 0 means the machine halts after writing (no head move on halt).
struct TmEntry {
    uint8_t write = 0;
    int8_t move = 0; // -1 left, +1 right, 0 only on halting entries
    int8_t next = -1;
};

struct TuringMachine {
    uint32_t n_states = 1;
    std::array<TmEntry, 6> entries{}; // indexed state*2 + read symbol
};

// Machines with n states over a binary alphabet: (4n+2)^(2n) of them.
uint64_t machine_count(uint32_t n_states);

// Index -> machine, little-endian base-(4n+2) digits, entry order (state, read).
TuringMachine decode_machine(uint64_t index, uint32_t n_states);

enum class RunStatus { Halted, TimedOut };

struct RunResult {
    RunStatus status = RunStatus::TimedOut;
    std::string output; // visited tape window at halt, left to right
    uint32_t steps = 0;
};

// Simulate on a tape initially filled with `blank`, at most step_cap transitions.
// Detects runaway heads that can never return, so most non-halters finish early.
RunResult run_machine(const TuringMachine& tm, uint32_t step_cap, uint8_t blank);

struct FrequencyDistribution {
    uint32_t n_states = 1;
    uint32_t step_cap = 500;
    uint64_t total_machines = 0; // enumerated machine indices
    uint64_t total_halting = 0;  // halting runs across both blank symbols
    std::map<std::string, uint64_t> counts;
};

// Run every n-state machine once per blank symbol and tally halt outputs.
FrequencyDistribution build_frequency_distribution(uint32_t n_states, uint32_t step_cap = 500);

// counts -> -log2(frequency) string table; fallback is max value + 1.
CtmTable ctm_from_frequency(const FrequencyDistribution& f);

} // namespace rbnlab
