#include "core/ctm_enum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rbnlab {

namespace {

constexpr uint32_t kMaxStates = 3;

// Over-approximate halting reachability on the state graph, tape ignored.
// If no reachable entry halts, the machine cannot halt from any tape.
bool may_halt(const TuringMachine& tm) {
    uint32_t reached = 1; // bitmask of states, start state 0
    uint32_t frontier = 1;
    while (frontier) {
        uint32_t next_frontier = 0;
        for (uint32_t s = 0; s < tm.n_states; ++s) {
            if (!(frontier & (1u << s))) continue;
            for (uint32_t r = 0; r < 2; ++r) {
                const TmEntry& e = tm.entries[s * 2 + r];
                if (e.next < 0) return true;
                uint32_t bit = 1u << e.next;
                if (!(reached & bit)) {
                    reached |= bit;
                    next_frontier |= bit;
                }
            }
        }
        frontier = next_frontier;
    }
    return false;
}

} // namespace

uint64_t machine_count(uint32_t n_states) {
    if (n_states == 0 || n_states > kMaxStates)
        throw std::invalid_argument("machine_count: supported state counts are 1..3");
    uint64_t base = 4ull * n_states + 2;
    uint64_t count = 1;
    for (uint32_t i = 0; i < 2 * n_states; ++i) count *= base;
    return count;
}

TuringMachine decode_machine(uint64_t index, uint32_t n_states) {
    uint64_t total = machine_count(n_states);
    if (index >= total) throw std::invalid_argument("decode_machine: index out of range");
    TuringMachine tm;
    tm.n_states = n_states;
    const uint64_t base = 4ull * n_states + 2;
    for (uint32_t i = 0; i < 2 * n_states; ++i) {
        uint32_t d = uint32_t(index % base);
        index /= base;
        TmEntry& e = tm.entries[i];
        if (d < 4 * n_states) {
            e.write = uint8_t(d & 1);
            e.move = (d >> 1) & 1 ? int8_t(1) : int8_t(-1);
            e.next = int8_t(d >> 2);
        } else {
            e.write = uint8_t(d - 4 * n_states);
            e.move = 0;
            e.next = -1;
        }
    }
    return tm;
}

RunResult run_machine(const TuringMachine& tm, uint32_t step_cap, uint8_t blank) {
    if (tm.n_states == 0 || tm.n_states > kMaxStates)
        throw std::invalid_argument("run_machine: supported state counts are 1..3");
    if (step_cap == 0) throw std::invalid_argument("run_machine: step_cap must be positive");
    if (blank > 1) throw std::invalid_argument("run_machine: blank symbol must be 0 or 1");

    std::vector<uint8_t> tape(2 * size_t(step_cap) + 3, blank);
    int64_t head = step_cap + 1;
    int64_t lo = head, hi = head; // visited window
    uint32_t state = 0;

    // While the head runs outward over never-visited blanks, only the state
    // matters; a repeated state in one such run means it never comes back.
    bool escaping = false;
    int8_t escape_dir = 0;
    uint32_t escape_seen = 0;

    RunResult res;
    for (uint32_t step = 0; step < step_cap; ++step) {
        bool fresh_right = head > hi;
        bool fresh_left = head < lo;
        if (fresh_right) hi = head;
        if (fresh_left) lo = head;

        const TmEntry& e = tm.entries[state * 2 + tape[head]];
        tape[head] = e.write;
        ++res.steps;
        if (e.next < 0) {
            res.status = RunStatus::Halted;
            res.output.reserve(size_t(hi - lo + 1));
            for (int64_t i = lo; i <= hi; ++i) res.output.push_back(char('0' + tape[i]));
            return res;
        }

        if (fresh_right || fresh_left) {
            int8_t dir = fresh_right ? 1 : -1;
            if (escaping && dir == escape_dir) {
                if (escape_seen & (1u << state)) return res; // TimedOut, runs forever
                escape_seen |= 1u << state;
            } else {
                escaping = true;
                escape_dir = dir;
                escape_seen = 1u << state;
            }
            if (e.move != dir) escaping = false;
        } else {
            escaping = false;
        }

        head += e.move;
        state = uint32_t(e.next);
    }
    return res; // TimedOut
}

FrequencyDistribution build_frequency_distribution(uint32_t n_states, uint32_t step_cap) {
    FrequencyDistribution f;
    f.n_states = n_states;
    f.step_cap = step_cap;
    f.total_machines = machine_count(n_states);
    for (uint64_t idx = 0; idx < f.total_machines; ++idx) {
        TuringMachine tm = decode_machine(idx, n_states);
        if (!may_halt(tm)) continue;
        for (uint8_t blank = 0; blank < 2; ++blank) {
            RunResult r = run_machine(tm, step_cap, blank);
            if (r.status == RunStatus::Halted) {
                ++f.counts[r.output];
                ++f.total_halting;
            }
        }
    }
    return f;
}

CtmTable ctm_from_frequency(const FrequencyDistribution& f) {
    if (f.total_halting == 0 || f.counts.empty())
        throw std::invalid_argument("ctm_from_frequency: no halting runs to estimate from");
    CtmTable t;
    t.shape = BlockShape::String;
    double mx = 0;
    size_t longest = 0;
    for (const auto& [block, n] : f.counts) {
        double v = -std::log2(double(n) / double(f.total_halting));
        t.entries.emplace(block, v);
        mx = std::max(mx, v);
        longest = std::max(longest, block.size());
    }
    t.size = uint32_t(longest);
    t.fallback = mx + 1.0;
    return t;
}

} // namespace rbnlab
