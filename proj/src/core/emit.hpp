#pragma once

#include <string>
#include <vector>

#include "core/bit_matrix.hpp"
#include "core/experiments.hpp"
#include "core/perturb.hpp"
#include "core/transition.hpp"

namespace rbnlab {

// Plain PBM (P1): textual, bit-exact everywhere. Image width = matrix cols.
void write_pbm(const BitMatrix& m, const std::string& path);

// One row per (k, grid point, sample):
// k,p,sample,entropy_tt,lzw_tt,bdm_tt,entropy_diag,lzw_diag,bdm_diag
void write_points_csv(const std::vector<SweepSeries>& series, const std::string& path);

// One row per series: k,detected_p,theoretical_p
void write_summary_csv(const std::vector<SweepSeries>& series, const std::string& path);

// Single-matrix measurements: entropy,lzw,bdm and one data row.
void write_report_csv(const RandomnessReport& r, const std::string& path);

// state,next over the whole state space.
void write_successor_csv(const TransitionGraph& g, const std::string& path);

// state,score with the converged flag echoed in a trailing comment line.
void write_prestige_csv(const PrestigeResult& p, const std::string& path);

// Cycles, basin sizes, and the transient horizon in a small text report.
void write_attractor_report(const AttractorInfo& info, const std::string& path);

// rank,state,prestige,entropy_rel,lzw_rel,bdm_rel,aid,classification
void write_perturb_csv(const PerturbationSeries& s, const std::string& path);

} // namespace rbnlab
