#pragma once

#include <cstdint>

namespace rbnlab {

// splitmix64. One 64-bit state word, one output per call. Small enough to
// copy by value, and any two distinct seeds give independent-looking streams,
// which is what the derived-stream scheme below leans on.
class RngStream {
public:
    RngStream() = default;
    explicit constexpr RngStream(uint64_t state) : state_(state) {}

    constexpr uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // floor(n * v / 2^64) for one draw v. The 128-bit product keeps it exact,
    // no floating point involved.
    constexpr uint64_t next_below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // One draw v, true iff v / 2^64 < p in real arithmetic. Comparing in the
    // integer domain avoids the corner where double(v) rounds up to 1.0, so
    // p=0 never fires and p=1 always does. A draw is consumed either way to
    // keep stream positions independent of p.
    bool next_bernoulli(double p) {
        uint64_t v = next();
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        long double t = static_cast<long double>(p) * 18446744073709551616.0L; // p * 2^64, exact
        uint64_t fl = static_cast<uint64_t>(t);
        if (static_cast<long double>(fl) == t) return v < fl;
        return v <= fl; // v < ceil(t)
    }

    constexpr uint64_t state() const { return state_; }

private:
    uint64_t state_ = 0;
};

// Deterministic substream derivation: seed = splitmix64(master ^ splitmix64(id)).
// Lets one master seed fan out into any number of reproducible streams that
// can be consumed in any order (wiring, initial state, per-grid-point tables).
inline RngStream derive_stream(uint64_t master_seed, uint64_t stream_id) {
    RngStream a(stream_id);
    RngStream b(master_seed ^ a.next());
    return RngStream(b.next());
}

// Substream id layout used across the project: role in the top byte, then the
// in-degree index, grid-point index and sample index. Zeros everywhere but the
// role give the ids used for one-off network generation.
namespace stream_role {
inline constexpr uint64_t wiring = 1;
inline constexpr uint64_t initial_state = 2;
inline constexpr uint64_t truth_tables = 3;
} // namespace stream_role

inline constexpr uint64_t stream_id(uint64_t role, uint64_t k_index = 0,
                                    uint64_t p_index = 0, uint64_t sample = 0) {
    return (role << 56) | ((k_index & 0xffull) << 48) | ((p_index & 0xffffull) << 32) |
           (sample & 0xffffffffull);
}

} // namespace rbnlab
