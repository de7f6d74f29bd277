#include "core/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rbnlab {

void validate_sweep_config(const SweepConfig& cfg) {
    if (cfg.in_degrees.empty())
        throw std::invalid_argument("sweep config: need at least one in-degree");
    if (!(cfg.p_min >= 0 && cfg.p_max <= 1 && cfg.p_min <= cfg.p_max))
        throw std::invalid_argument("sweep config: p range must satisfy 0 <= p_min <= p_max <= 1");
    if (cfg.p_points < 2) throw std::invalid_argument("sweep config: p_points must be >= 2");
    if (cfg.samples < 1) throw std::invalid_argument("sweep config: samples must be >= 1");
    if (cfg.steps == 0) throw std::invalid_argument("sweep config: steps must be >= 1");
    for (uint32_t k : cfg.in_degrees) {
        RbnParams p;
        p.n_nodes = cfg.n_nodes;
        p.in_degree = k;
        p.wiring = cfg.wiring;
        p.wiring_p = cfg.wiring_p;
        validate_params(p);
    }
}

std::vector<double> p_grid(const SweepConfig& cfg) {
    std::vector<double> grid(cfg.p_points);
    for (uint32_t i = 0; i < cfg.p_points; ++i)
        grid[i] = cfg.p_min + (cfg.p_max - cfg.p_min) * double(i) / double(cfg.p_points - 1);
    return grid;
}

namespace {

RbnParams params_for(const SweepConfig& cfg, uint32_t k_index, double bias) {
    RbnParams p;
    p.n_nodes = cfg.n_nodes;
    p.in_degree = cfg.in_degrees.at(k_index);
    p.bias = bias;
    p.wiring = cfg.wiring;
    p.wiring_p = cfg.wiring_p;
    return p;
}

std::vector<uint32_t> wiring_for(const SweepConfig& cfg, const RbnParams& params,
                                 uint32_t k_index, uint32_t p_index, uint32_t sample) {
    uint64_t id = stream_id(stream_role::wiring, k_index, cfg.shared_wiring ? 0 : p_index,
                            cfg.shared_wiring ? 0 : sample);
    RngStream rng = derive_stream(cfg.master_seed, id);
    return generate_wiring(params, rng);
}

BitMatrix truth_matrix(const BooleanNetwork& net) {
    BitMatrix m(net.params.n_nodes, size_t(1) << net.params.in_degree);
    for (size_t i = 0; i < net.truth.size(); ++i)
        if (net.truth[i]) m.set_flat(i, true);
    return m;
}

} // namespace

BooleanNetwork network_for_point(const SweepConfig& cfg, uint32_t k_index, uint32_t p_index,
                                 uint32_t sample) {
    validate_sweep_config(cfg);
    std::vector<double> grid = p_grid(cfg);
    BooleanNetwork net;
    net.params = params_for(cfg, k_index, grid.at(p_index));
    net.wiring = wiring_for(cfg, net.params, k_index, p_index, sample);
    RngStream truth_rng =
        derive_stream(cfg.master_seed, stream_id(stream_role::truth_tables, k_index, p_index, sample));
    net.truth = generate_truth_tables(net.params, truth_rng);
    return net;
}

std::vector<uint8_t> initial_for_point(const SweepConfig& cfg, uint32_t k_index, uint32_t p_index,
                                       uint32_t sample) {
    uint64_t id = stream_id(stream_role::initial_state, k_index, cfg.shared_initial ? 0 : p_index,
                            cfg.shared_initial ? 0 : sample);
    RngStream rng = derive_stream(cfg.master_seed, id);
    return random_state(cfg.n_nodes, rng);
}

SweepSeries sweep_k(const SweepConfig& cfg, uint32_t k_index, const CtmTable& table) {
    validate_sweep_config(cfg);
    SweepSeries series;
    series.k = cfg.in_degrees.at(k_index);
    series.grid = p_grid(cfg);

    // shared artifacts are generated once and reused across the whole series
    std::vector<uint32_t> shared_wiring;
    if (cfg.shared_wiring)
        shared_wiring = wiring_for(cfg, params_for(cfg, k_index, 0.5), k_index, 0, 0);
    std::vector<uint8_t> shared_initial;
    if (cfg.shared_initial) shared_initial = initial_for_point(cfg, k_index, 0, 0);

    series.points.reserve(size_t(cfg.p_points) * cfg.samples);
    series.mean_tt.resize(cfg.p_points);
    series.mean_diag.resize(cfg.p_points);

    for (uint32_t pi = 0; pi < cfg.p_points; ++pi) {
        RandomnessReport sum_tt, sum_diag;
        for (uint32_t s = 0; s < cfg.samples; ++s) {
            BooleanNetwork net;
            net.params = params_for(cfg, k_index, series.grid[pi]);
            net.wiring = cfg.shared_wiring ? shared_wiring
                                           : wiring_for(cfg, net.params, k_index, pi, s);
            RngStream truth_rng = derive_stream(
                cfg.master_seed, stream_id(stream_role::truth_tables, k_index, pi, s));
            net.truth = generate_truth_tables(net.params, truth_rng);
            std::vector<uint8_t> init =
                cfg.shared_initial ? shared_initial : initial_for_point(cfg, k_index, pi, s);

            SweepPoint pt;
            pt.p_index = pi;
            pt.sample = s;
            pt.p = series.grid[pi];
            pt.truth_tables = randomness_report(truth_matrix(net), table);
            pt.diagram = randomness_report(evolve(net, init, cfg.steps), table);
            sum_tt.entropy += pt.truth_tables.entropy;
            sum_tt.lzw_rate += pt.truth_tables.lzw_rate;
            sum_tt.bdm += pt.truth_tables.bdm;
            sum_diag.entropy += pt.diagram.entropy;
            sum_diag.lzw_rate += pt.diagram.lzw_rate;
            sum_diag.bdm += pt.diagram.bdm;
            series.points.push_back(pt);
        }
        const double n = cfg.samples;
        series.mean_tt[pi] = {sum_tt.entropy / n, sum_tt.lzw_rate / n, sum_tt.bdm / n};
        series.mean_diag[pi] = {sum_diag.entropy / n, sum_diag.lzw_rate / n, sum_diag.bdm / n};
    }
    return series;
}

std::vector<SweepSeries> run_sweeps(const SweepConfig& cfg, const CtmTable& table) {
    validate_sweep_config(cfg);
    std::vector<SweepSeries> out;
    out.reserve(cfg.in_degrees.size());
    for (uint32_t ki = 0; ki < cfg.in_degrees.size(); ++ki)
        out.push_back(sweep_k(cfg, ki, table));
    return out;
}

CriticalityResult detect_critical_p(const SweepSeries& series) {
    const size_t n = series.grid.size();
    if (n < 3 || series.mean_diag.size() != n)
        throw std::invalid_argument("detect_critical_p: need at least 3 grid points");

    std::vector<double> smooth(n);
    for (size_t i = 0; i < n; ++i) {
        size_t lo = i == 0 ? 0 : i - 1;
        size_t hi = i == n - 1 ? i : i + 1;
        double sum = 0;
        for (size_t j = lo; j <= hi; ++j) sum += series.mean_diag[j].bdm;
        smooth[i] = sum / double(hi - lo + 1);
    }

    size_t best = 0;
    double best_diff = smooth[1] - smooth[0];
    for (size_t i = 1; i + 1 < n; ++i) {
        double d = smooth[i + 1] - smooth[i];
        if (d > best_diff) {
            best_diff = d;
            best = i;
        }
    }

    CriticalityResult res;
    res.method = "max-forward-difference-of-smoothed-bdm";
    res.degenerate = !(best_diff > 0);
    // the 3-point average brings a step's rise forward by two indices; the
    // smaller-p tie rule lands on the first of them, so step back up two
    res.detected_p = series.grid[std::min(best + 2, n - 1)];
    res.theoretical_p = series.k >= 2 ? theoretical_critical_p(series.k).low
                                      : std::numeric_limits<double>::quiet_NaN();
    return res;
}

} // namespace rbnlab
