#include "core/transition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rbnlab {

TransitionGraph build_transition_graph(const BooleanNetwork& net, uint32_t max_nodes) {
    const uint32_t n = net.params.n_nodes;
    if (n > max_nodes || n >= 32)
        throw std::length_error("build_transition_graph: state space too large");
    TransitionGraph g;
    g.n_nodes = n;
    const size_t total = size_t(1) << n;
    g.succ.resize(total);
    std::vector<uint8_t> in(n), out(n);
    for (size_t s = 0; s < total; ++s) {
        for (uint32_t i = 0; i < n; ++i) in[i] = (s >> (n - 1 - i)) & 1;
        step(net, in.data(), out.data());
        size_t t = 0;
        for (uint32_t i = 0; i < n; ++i) t = (t << 1) | out[i];
        g.succ[s] = uint32_t(t);
    }
    return g;
}

AttractorInfo find_attractors(const TransitionGraph& g) {
    const size_t total = g.state_count();
    if (total == 0) throw std::invalid_argument("find_attractors: empty graph");
    constexpr uint32_t kUnset = UINT32_MAX;

    AttractorInfo info;
    info.attractor_of.assign(total, kUnset);
    info.transient_len.assign(total, 0);

    std::vector<uint8_t> color(total, 0); // 0 new, 1 on current walk, 2 settled
    std::vector<uint32_t> path;
    std::vector<uint32_t> pos_on_path(total, 0);

    for (size_t start = 0; start < total; ++start) {
        if (color[start] != 0) continue;
        path.clear();
        uint32_t v = uint32_t(start);
        while (color[v] == 0) {
            color[v] = 1;
            pos_on_path[v] = uint32_t(path.size());
            path.push_back(v);
            v = g.succ[v];
        }

        size_t tail_begin = path.size(); // first path index that is NOT part of a new cycle
        if (color[v] == 1) {
            // walked into our own path: the suffix from v is a new cycle
            tail_begin = pos_on_path[v];
            uint32_t idx = uint32_t(info.attractors.size());
            std::vector<uint32_t> cycle(path.begin() + tail_begin, path.end());
            for (uint32_t c : cycle) {
                info.attractor_of[c] = idx;
                info.transient_len[c] = 0;
            }
            auto mn = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), mn, cycle.end());
            info.attractors.push_back(std::move(cycle));
        }

        // unwind the transient prefix back to front
        for (size_t i = tail_begin; i-- > 0;) {
            uint32_t u = path[i];
            uint32_t nxt = g.succ[u];
            info.attractor_of[u] = info.attractor_of[nxt];
            info.transient_len[u] = info.transient_len[nxt] + 1;
        }
        for (uint32_t u : path) color[u] = 2;
    }

    // stable order: by smallest state on the cycle
    std::vector<uint32_t> order(info.attractors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return info.attractors[a][0] < info.attractors[b][0];
    });
    std::vector<uint32_t> rank(order.size());
    for (uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::vector<std::vector<uint32_t>> sorted;
    sorted.reserve(order.size());
    for (uint32_t i : order) sorted.push_back(std::move(info.attractors[i]));
    info.attractors = std::move(sorted);
    for (auto& a : info.attractor_of) a = rank[a];

    info.basin_size.assign(info.attractors.size(), 0);
    for (size_t s = 0; s < total; ++s) {
        ++info.basin_size[info.attractor_of[s]];
        info.max_transient = std::max(info.max_transient, info.transient_len[s]);
    }
    return info;
}

PrestigeResult prestige_scores(const TransitionGraph& g, uint32_t max_iter, double tol) {
    const size_t total = g.state_count();
    if (total == 0) throw std::invalid_argument("prestige_scores: empty graph");
    PrestigeResult res;
    std::vector<double>& x = res.score;
    x.assign(total, 1.0 / std::sqrt(double(total)));
    std::vector<double> next(total);
    for (uint32_t it = 0; it < max_iter; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        for (size_t v = 0; v < total; ++v) next[g.succ[v]] += x[v];
        double norm = 0;
        for (double v : next) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : next) v /= norm;
        double diff = 0;
        for (size_t i = 0; i < total; ++i) diff = std::max(diff, std::abs(next[i] - x[i]));
        x.swap(next);
        res.iterations = it + 1;
        if (diff <= tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

BitMatrix adjacency_matrix(const TransitionGraph& g) {
    const size_t total = g.state_count();
    BitMatrix m(total, total);
    for (size_t u = 0; u < total; ++u) m.set(u, g.succ[u], true);
    return m;
}

} // namespace rbnlab
