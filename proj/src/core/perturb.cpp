#include "core/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rbnlab {

BitMatrix disconnect_node(const BitMatrix& adjacency, uint32_t node) {
    if (node >= adjacency.rows() || node >= adjacency.cols())
        throw std::out_of_range("disconnect_node: node outside matrix");
    BitMatrix out = adjacency;
    for (size_t c = 0; c < out.cols(); ++c) out.set(node, c, false);
    for (size_t r = 0; r < out.rows(); ++r) out.set(r, node, false);
    return out;
}

BitMatrix remove_node(const BitMatrix& adjacency, uint32_t node) {
    if (node >= adjacency.rows() || node >= adjacency.cols())
        throw std::out_of_range("remove_node: node outside matrix");
    if (adjacency.rows() < 2 || adjacency.cols() < 2)
        throw std::invalid_argument("remove_node: nothing would remain");
    BitMatrix out(adjacency.rows() - 1, adjacency.cols() - 1);
    for (size_t r = 0, ro = 0; r < adjacency.rows(); ++r) {
        if (r == node) continue;
        for (size_t c = 0, co = 0; c < adjacency.cols(); ++c) {
            if (c == node) continue;
            if (adjacency.get(r, c)) out.set(ro, co, true);
            ++co;
        }
        ++ro;
    }
    return out;
}

RelativeChange relative_randomness_change(const RandomnessReport& before,
                                          const RandomnessReport& after) {
    RelativeChange rc;
    auto ratio = [](double b, double a, double& out, bool& valid) {
        if (b == 0) {
            valid = false;
            out = 0;
        } else {
            out = (b - a) / b;
        }
    };
    ratio(before.entropy, after.entropy, rc.entropy, rc.entropy_valid);
    ratio(before.lzw_rate, after.lzw_rate, rc.lzw, rc.lzw_valid);
    ratio(before.bdm, after.bdm, rc.bdm, rc.bdm_valid);
    return rc;
}

const char* aid_class_name(AidClass c) {
    switch (c) {
    case AidClass::ContainedInDescription: return "contained";
    case AidClass::CausalNeutral: return "neutral";
    case AidClass::InformationLoss: return "information-loss";
    case AidClass::FundamentalOrNoise: return "fundamental-or-noise";
    }
    return "?";
}

AidClass classify_aid(double aid, uint64_t n_vertices, double band_tolerance) {
    if (n_vertices < 2) throw std::invalid_argument("classify_aid: need at least 2 vertices");
    if (band_tolerance < 0 || band_tolerance >= 1)
        throw std::invalid_argument("classify_aid: band_tolerance must be in [0,1)");
    const double L = std::log2(double(n_vertices));
    const double mag = std::abs(aid);
    if (mag < (1 - band_tolerance) * L) return AidClass::ContainedInDescription;
    if (mag <= (1 + band_tolerance) * L) return AidClass::CausalNeutral;
    if (mag <= double(n_vertices)) return AidClass::InformationLoss;
    return AidClass::FundamentalOrNoise;
}

PerturbationSeries perturbation_series(const TransitionGraph& diagram, const CtmTable& table,
                                       PerturbMode mode, uint32_t count,
                                       DisconnectMode disconnect) {
    const size_t total = diagram.state_count();
    if (count > total) throw std::invalid_argument("perturbation_series: count exceeds states");

    PerturbationSeries series;
    series.mode = mode;
    series.disconnect = disconnect;

    const BitMatrix pristine = adjacency_matrix(diagram);
    series.baseline = randomness_report(pristine, table);

    PrestigeResult prestige = prestige_scores(diagram);
    std::vector<uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        double sa = prestige.score[a], sb = prestige.score[b];
        if (sa != sb) return mode == PerturbMode::MostRelevant ? sa > sb : sa < sb;
        return a < b;
    });

    series.records.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        uint32_t node = order[i];
        PerturbationRecord rec;
        rec.node = node;
        rec.prestige = prestige.score[node];
        rec.before = series.baseline;
        BitMatrix perturbed = disconnect == DisconnectMode::Isolate
                                  ? disconnect_node(pristine, node)
                                  : remove_node(pristine, node);
        rec.after = randomness_report(perturbed, table);
        rec.relative = relative_randomness_change(rec.before, rec.after);
        rec.aid = rec.before.bdm - rec.after.bdm;
        rec.classification = classify_aid(rec.aid, total);
        series.records.push_back(std::move(rec));
    }
    return series;
}

} // namespace rbnlab
