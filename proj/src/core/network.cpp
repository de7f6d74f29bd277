#include "core/network.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbnlab {

namespace {
constexpr uint32_t kMaxInDegree = 20; // 2^k table bits per node; keep allocations sane
}

void validate_params(const RbnParams& p) {
    if (p.n_nodes == 0) throw std::invalid_argument("n_nodes must be positive");
    if (p.in_degree == 0) throw std::invalid_argument("in_degree must be positive");
    if (p.in_degree > kMaxInDegree)
        throw std::invalid_argument("in_degree exceeds supported maximum of 20");
    if (!(p.bias >= 0.0 && p.bias <= 1.0))
        throw std::invalid_argument("bias must lie in [0,1]");
    if (!(p.wiring_p >= 0.0 && p.wiring_p <= 1.0))
        throw std::invalid_argument("wiring_p must lie in [0,1]");
}

std::vector<uint32_t> generate_wiring(const RbnParams& p, RngStream& rng) {
    validate_params(p);
    std::vector<uint32_t> w(size_t(p.n_nodes) * p.in_degree);
    if (p.wiring == WiringDist::Uniform) {
        for (auto& e : w) e = uint32_t(rng.next_below(p.n_nodes));
    } else {
        for (auto& e : w) {
            uint32_t s = 0;
            for (uint32_t t = 0; t + 1 < p.n_nodes; ++t)
                s += rng.next_bernoulli(p.wiring_p) ? 1 : 0;
            e = s;
        }
    }
    return w;
}

std::vector<uint8_t> generate_truth_tables(const RbnParams& p, RngStream& rng) {
    validate_params(p);
    std::vector<uint8_t> t(size_t(p.n_nodes) << p.in_degree);
    for (auto& bit : t) bit = rng.next_bernoulli(p.bias) ? 1 : 0;
    return t;
}

BooleanNetwork generate_network(const RbnParams& p, uint64_t master_seed) {
    validate_params(p);
    BooleanNetwork net;
    net.params = p;
    RngStream ws = derive_stream(master_seed, stream_id(stream_role::wiring));
    net.wiring = generate_wiring(p, ws);
    RngStream ts = derive_stream(master_seed, stream_id(stream_role::truth_tables));
    net.truth = generate_truth_tables(p, ts);
    return net;
}

std::vector<uint8_t> random_state(uint32_t n_nodes, RngStream& rng) {
    std::vector<uint8_t> s(n_nodes);
    for (auto& b : s) b = rng.next_bernoulli(0.5) ? 1 : 0;
    return s;
}

void step(const BooleanNetwork& net, const uint8_t* in, uint8_t* out) {
    const uint32_t n = net.params.n_nodes;
    const uint32_t k = net.params.in_degree;
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t idx = 0;
        for (uint32_t s = 0; s < k; ++s) idx = (idx << 1) | in[net.input(i, s)];
        out[i] = net.table(i, idx);
    }
}

BitMatrix evolve(const BooleanNetwork& net, const std::vector<uint8_t>& initial, uint32_t steps) {
    const uint32_t n = net.params.n_nodes;
    if (initial.size() != n) throw std::invalid_argument("evolve: initial state has wrong length");
    if (steps == 0) throw std::invalid_argument("evolve: steps must be positive");
    BitMatrix m(steps, n);
    std::vector<uint8_t> cur = initial, nxt(n);
    for (uint32_t i = 0; i < n; ++i) m.set(0, i, cur[i]);
    for (uint32_t t = 1; t < steps; ++t) {
        step(net, cur.data(), nxt.data());
        cur.swap(nxt);
        for (uint32_t i = 0; i < n; ++i) m.set(t, i, cur[i]);
    }
    return m;
}

Regime classify_regime(uint32_t k, double p, double tol) {
    if (k == 0) throw std::invalid_argument("classify_regime: k must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("classify_regime: p must lie in [0,1]");
    double x = 2.0 * k * p * (1.0 - p);
    if (std::abs(x - 1.0) <= tol) return Regime::Critical;
    return x < 1.0 ? Regime::Ordered : Regime::Chaotic;
}

CriticalPair theoretical_critical_p(uint32_t k) {
    if (k < 2) throw std::invalid_argument("theoretical_critical_p: defined for k >= 2");
    double r = std::sqrt(1.0 - 2.0 / double(k));
    return {(1.0 - r) / 2.0, (1.0 + r) / 2.0};
}

void save_network(const BooleanNetwork& net, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    const uint32_t n = net.params.n_nodes, k = net.params.in_degree;
    f << n << ' ' << k << '\n';
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t s = 0; s < k; ++s) f << (s ? " " : "") << net.input(i, s);
        f << '\n';
    }
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t idx = 0; idx < (1u << k); ++idx) f << char('0' + net.table(i, idx));
        f << '\n';
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

BooleanNetwork load_network(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    BooleanNetwork net;
    uint32_t n = 0, k = 0;
    if (!(f >> n >> k)) throw std::runtime_error("network fixture: bad header in " + path);
    net.params.n_nodes = n;
    net.params.in_degree = k;
    validate_params(net.params);
    net.wiring.resize(size_t(n) * k);
    for (auto& e : net.wiring) {
        if (!(f >> e)) throw std::runtime_error("network fixture: truncated wiring in " + path);
        if (e >= n) throw std::runtime_error("network fixture: wiring index out of range in " + path);
    }
    net.truth.resize(size_t(n) << k);
    std::string line;
    for (uint32_t i = 0; i < n; ++i) {
        if (!(f >> line) || line.size() != (size_t(1) << k))
            throw std::runtime_error("network fixture: bad truth-table line in " + path);
        for (size_t j = 0; j < line.size(); ++j) {
            if (line[j] != '0' && line[j] != '1')
                throw std::runtime_error("network fixture: truth tables must be 0/1 in " + path);
            net.truth[(size_t(i) << k) + j] = uint8_t(line[j] - '0');
        }
    }
    return net;
}

} // namespace rbnlab
