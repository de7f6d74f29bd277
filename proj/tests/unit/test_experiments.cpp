#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "core/experiments.hpp"
#include "fixture.hpp"

using namespace rbnlab;

namespace {

SweepConfig tiny_config() {
    SweepConfig cfg;
    cfg.n_nodes = 16;
    cfg.in_degrees = {2};
    cfg.p_points = 5;
    cfg.steps = 16;
    cfg.samples = 2;
    cfg.master_seed = 11;
    return cfg;
}

SweepSeries series_with_bdm(std::vector<double> bdm, uint32_t k = 5, double p_min = 0.0,
                            double p_max = 0.5) {
    SweepSeries s;
    s.k = k;
    SweepConfig cfg;
    cfg.p_min = p_min;
    cfg.p_max = p_max;
    cfg.p_points = uint32_t(bdm.size());
    s.grid = p_grid(cfg);
    s.mean_diag.resize(bdm.size());
    for (size_t i = 0; i < bdm.size(); ++i) s.mean_diag[i].bdm = bdm[i];
    return s;
}

} // namespace

TEST_CASE("the default p grid spans [0, 0.5] in 41 even steps") {
    SweepConfig cfg;
    std::vector<double> grid = p_grid(cfg);
    REQUIRE(grid.size() == 41);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 0.5);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(grid[i] == doctest::Approx(0.0125 * double(i)).epsilon(1e-14));
}

TEST_CASE("sweep config validation") {
    CHECK_NOTHROW(validate_sweep_config(SweepConfig{}));
    SweepConfig cfg;
    cfg.in_degrees = {};
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.p_min = 0.6;
    cfg.p_max = 0.4;
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.p_points = 1;
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.samples = 0;
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.steps = 0;
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.in_degrees = {21}; // over the supported in-degree cap
    CHECK_THROWS_AS(validate_sweep_config(cfg), std::invalid_argument);
}

TEST_CASE("shared wiring and initial state collapse the per-point streams") {
    SweepConfig cfg = tiny_config();

    BooleanNetwork a = network_for_point(cfg, 0, 1, 0);
    BooleanNetwork b = network_for_point(cfg, 0, 3, 1);
    CHECK(a.wiring == b.wiring);
    CHECK(initial_for_point(cfg, 0, 1, 0) == initial_for_point(cfg, 0, 3, 1));

    cfg.shared_wiring = false;
    cfg.shared_initial = false;
    BooleanNetwork c = network_for_point(cfg, 0, 1, 0);
    BooleanNetwork d = network_for_point(cfg, 0, 3, 1);
    CHECK(c.wiring != d.wiring);
    CHECK(initial_for_point(cfg, 0, 1, 0) != initial_for_point(cfg, 0, 3, 1));

    // truth tables never share a stream: same wiring, different rules
    CHECK(a.truth != b.truth);
}

TEST_CASE("points are reproducible from the master seed alone") {
    SweepConfig cfg = tiny_config();
    BooleanNetwork a = network_for_point(cfg, 0, 2, 1);
    BooleanNetwork b = network_for_point(cfg, 0, 2, 1);
    CHECK(a.wiring == b.wiring);
    CHECK(a.truth == b.truth);

    cfg.master_seed = 12;
    BooleanNetwork c = network_for_point(cfg, 0, 2, 1);
    CHECK((a.wiring != c.wiring || a.truth != c.truth));
}

TEST_CASE("a sweep walks the grid in (p_index, sample) order and averages per point") {
    SweepConfig cfg = tiny_config();
    CtmTable table = testfix::popcount_square_table();
    SweepSeries series = sweep_k(cfg, 0, table);

    CHECK(series.k == 2);
    REQUIRE(series.grid.size() == 5);
    REQUIRE(series.points.size() == 10);
    REQUIRE(series.mean_tt.size() == 5);
    REQUIRE(series.mean_diag.size() == 5);

    for (uint32_t pi = 0; pi < 5; ++pi) {
        for (uint32_t s = 0; s < 2; ++s) {
            const SweepPoint& pt = series.points[pi * 2 + s];
            CHECK(pt.p_index == pi);
            CHECK(pt.sample == s);
            CHECK(pt.p == series.grid[pi]);
        }
        double want_tt = (series.points[pi * 2].truth_tables.bdm +
                          series.points[pi * 2 + 1].truth_tables.bdm) /
                         2.0;
        CHECK(series.mean_tt[pi].bdm == doctest::Approx(want_tt).epsilon(1e-15));
        double want_diag = (series.points[pi * 2].diagram.entropy +
                            series.points[pi * 2 + 1].diagram.entropy) /
                           2.0;
        CHECK(series.mean_diag[pi].entropy == doctest::Approx(want_diag).epsilon(1e-15));
    }

    // each point is exactly the report of the exposed network and initial state
    BooleanNetwork net = network_for_point(cfg, 0, 3, 1);
    std::vector<uint8_t> init = initial_for_point(cfg, 0, 3, 1);
    RandomnessReport diag = randomness_report(evolve(net, init, cfg.steps), table);
    CHECK(series.points[3 * 2 + 1].diagram.bdm == diag.bdm);
    CHECK(series.points[3 * 2 + 1].diagram.entropy == diag.entropy);

    // determinism end to end
    SweepSeries again = sweep_k(cfg, 0, table);
    for (size_t i = 0; i < series.points.size(); ++i) {
        CHECK(series.points[i].diagram.bdm == again.points[i].diagram.bdm);
        CHECK(series.points[i].truth_tables.bdm == again.points[i].truth_tables.bdm);
    }
}

TEST_CASE("a single-sample sweep reports the lone sample as the mean") {
    SweepConfig cfg = tiny_config();
    cfg.samples = 1;
    CtmTable table = testfix::popcount_square_table();
    SweepSeries series = sweep_k(cfg, 0, table);
    for (uint32_t pi = 0; pi < cfg.p_points; ++pi) {
        CHECK(series.mean_diag[pi].bdm == series.points[pi].diagram.bdm);
        CHECK(series.mean_tt[pi].entropy == series.points[pi].truth_tables.entropy);
    }
}

TEST_CASE("run_sweeps yields one series per in-degree") {
    SweepConfig cfg = tiny_config();
    cfg.in_degrees = {2, 3};
    CtmTable table = testfix::popcount_square_table();
    std::vector<SweepSeries> all = run_sweeps(cfg, table);
    REQUIRE(all.size() == 2);
    CHECK(all[0].k == 2);
    CHECK(all[1].k == 3);
    CHECK(all[0].points.size() == all[1].points.size());
}

TEST_CASE("a clean step in mean bdm is detected at the step's grid point") {
    std::vector<double> bdm(41, 0.0);
    for (size_t i = 17; i < bdm.size(); ++i) bdm[i] = 100.0;
    SweepSeries s = series_with_bdm(bdm);
    CriticalityResult r = detect_critical_p(s);
    CHECK_FALSE(r.degenerate);
    CHECK(r.detected_p == s.grid[17]);
    CHECK(r.method == "max-forward-difference-of-smoothed-bdm");
    CHECK(r.theoretical_p == doctest::Approx(0.1127016653792583).epsilon(1e-15));
}

TEST_CASE("flat or falling series are degenerate, detection never lies") {
    CriticalityResult flat = detect_critical_p(series_with_bdm(std::vector<double>(10, 3.0)));
    CHECK(flat.degenerate);

    std::vector<double> falling(10);
    for (size_t i = 0; i < falling.size(); ++i) falling[i] = 10.0 - double(i);
    CHECK(detect_critical_p(series_with_bdm(falling)).degenerate);

    // theoretical value is still reported alongside the degenerate flag
    CHECK(flat.theoretical_p == doctest::Approx(0.1127016653792583).epsilon(1e-15));
}

TEST_CASE("detection clamps at the top of the grid") {
    // rise lands on the last smoothed difference: argmax + 2 would overrun
    CriticalityResult r = detect_critical_p(series_with_bdm({0.0, 4.0, 4.0}));
    CHECK_FALSE(r.degenerate);
    CHECK(r.detected_p == 0.5);
}

TEST_CASE("detection guards its inputs") {
    CHECK_THROWS_AS(detect_critical_p(series_with_bdm({1.0, 2.0})), std::invalid_argument);
    SweepSeries broken = series_with_bdm({1.0, 2.0, 3.0, 4.0});
    broken.mean_diag.pop_back();
    CHECK_THROWS_AS(detect_critical_p(broken), std::invalid_argument);

    SweepSeries k1 = series_with_bdm({0.0, 0.0, 5.0, 5.0}, 1);
    CriticalityResult r = detect_critical_p(k1);
    CHECK(std::isnan(r.theoretical_p));
}
