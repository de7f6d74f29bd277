#include "core/emit.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rbnlab {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

void finish(std::ofstream& f, const std::string& path) {
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace

void write_pbm(const BitMatrix& m, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "P1\n" << m.cols() << ' ' << m.rows() << '\n';
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) f << ' ';
            f << (m.get(r, c) ? '1' : '0');
        }
        f << '\n';
    }
    finish(f, path);
}

void write_points_csv(const std::vector<SweepSeries>& series, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "k,p,sample,entropy_tt,lzw_tt,bdm_tt,entropy_diag,lzw_diag,bdm_diag\n";
    for (const SweepSeries& s : series) {
        for (const SweepPoint& pt : s.points) {
            f << s.k << ',' << fmt(pt.p) << ',' << pt.sample << ',' << fmt(pt.truth_tables.entropy)
              << ',' << fmt(pt.truth_tables.lzw_rate) << ',' << fmt(pt.truth_tables.bdm) << ','
              << fmt(pt.diagram.entropy) << ',' << fmt(pt.diagram.lzw_rate) << ','
              << fmt(pt.diagram.bdm) << '\n';
        }
    }
    finish(f, path);
}

void write_summary_csv(const std::vector<SweepSeries>& series, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "k,detected_p,theoretical_p\n";
    for (const SweepSeries& s : series) {
        CriticalityResult r = detect_critical_p(s);
        f << s.k << ',' << fmt(r.detected_p) << ',' << fmt(r.theoretical_p) << '\n';
    }
    finish(f, path);
}

void write_report_csv(const RandomnessReport& r, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "entropy,lzw,bdm\n" << fmt(r.entropy) << ',' << fmt(r.lzw_rate) << ',' << fmt(r.bdm)
      << '\n';
    finish(f, path);
}

void write_successor_csv(const TransitionGraph& g, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "state,next\n";
    for (size_t s = 0; s < g.succ.size(); ++s) f << s << ',' << g.succ[s] << '\n';
    finish(f, path);
}

void write_prestige_csv(const PrestigeResult& p, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "state,score\n";
    for (size_t s = 0; s < p.score.size(); ++s) f << s << ',' << fmt(p.score[s]) << '\n';
    f << "# converged=" << (p.converged ? "true" : "false") << " iterations=" << p.iterations
      << '\n';
    finish(f, path);
}

void write_attractor_report(const AttractorInfo& info, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "attractors " << info.attractors.size() << '\n';
    for (size_t i = 0; i < info.attractors.size(); ++i) {
        const auto& cyc = info.attractors[i];
        f << "attractor " << i << " period " << cyc.size() << " basin " << info.basin_size[i]
          << " states";
        for (uint32_t s : cyc) f << ' ' << s;
        f << '\n';
    }
    f << "max_transient " << info.max_transient << '\n';
    finish(f, path);
}

void write_perturb_csv(const PerturbationSeries& s, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "rank,state,prestige,entropy_rel,lzw_rel,bdm_rel,aid,classification\n";
    for (size_t i = 0; i < s.records.size(); ++i) {
        const PerturbationRecord& r = s.records[i];
        f << i + 1 << ',' << r.node << ',' << fmt(r.prestige) << ',' << fmt(r.relative.entropy)
          << ',' << fmt(r.relative.lzw) << ',' << fmt(r.relative.bdm) << ',' << fmt(r.aid) << ','
          << aid_class_name(r.classification) << '\n';
    }
    finish(f, path);
}

} // namespace rbnlab
