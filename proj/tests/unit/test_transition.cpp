#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/transition.hpp"
#include "fixture.hpp"

using namespace rbnlab;

namespace {

BooleanNetwork two_node_net(std::vector<uint32_t> wiring) {
    BooleanNetwork net;
    net.params.n_nodes = 2;
    net.params.in_degree = 1;
    net.wiring = std::move(wiring);
    net.truth = {0, 1, 0, 1}; // both nodes copy their input
    return net;
}

} // namespace

TEST_CASE("transition graph of the fixture matches the hand-walked successors") {
    BooleanNetwork net = testfix::xor_and_xnor_or();
    TransitionGraph g = build_transition_graph(net);
    CHECK(g.n_nodes == 4);
    REQUIRE(g.state_count() == 16);
    for (uint32_t s = 0; s < 16; ++s) CHECK(g.succ[s] == testfix::kFixtureSuccessor[s]);
}

TEST_CASE("state indices are big-endian in node order") {
    // swap network: node 0 reads node 1 and vice versa
    TransitionGraph g = build_transition_graph(two_node_net({1, 0}));
    REQUIRE(g.state_count() == 4);
    CHECK(g.succ[0] == 0);
    CHECK(g.succ[1] == 2); // (n0=0, n1=1) -> (1, 0), node 0 is the high bit
    CHECK(g.succ[2] == 1);
    CHECK(g.succ[3] == 3);
}

TEST_CASE("node budget guards the exponential blowup") {
    BooleanNetwork net = testfix::xor_and_xnor_or();
    CHECK_THROWS_AS(build_transition_graph(net, 3), std::length_error);
    CHECK_NOTHROW(build_transition_graph(net, 4));
}

TEST_CASE("fixture attractor analysis: one period-3 cycle catching everything") {
    TransitionGraph g = build_transition_graph(testfix::xor_and_xnor_or());
    AttractorInfo info = find_attractors(g);
    REQUIRE(info.attractors.size() == 1);
    CHECK(info.attractors[0] == std::vector<uint32_t>{3, 12, 9});
    CHECK(info.basin_size[0] == 16);
    CHECK(info.max_transient == 5);
    for (uint32_t s = 0; s < 16; ++s) {
        CHECK(info.attractor_of[s] == 0);
        CHECK(info.transient_len[s] == testfix::kFixtureTransient[s]);
    }
}

TEST_CASE("attractors are canonical: min state first, cycles ordered by minimum") {
    TransitionGraph g = build_transition_graph(two_node_net({1, 0}));
    AttractorInfo info = find_attractors(g);
    REQUIRE(info.attractors.size() == 3);
    CHECK(info.attractors[0] == std::vector<uint32_t>{0});
    CHECK(info.attractors[1] == std::vector<uint32_t>{1, 2});
    CHECK(info.attractors[2] == std::vector<uint32_t>{3});
    CHECK(info.basin_size == std::vector<uint64_t>{1, 2, 1});
    CHECK(info.attractor_of == std::vector<uint32_t>{0, 1, 1, 2});
    CHECK(info.max_transient == 0);
    for (uint32_t s = 0; s < 4; ++s) CHECK(info.transient_len[s] == 0);
}

TEST_CASE("prestige is stationary when every state is a fixed point") {
    TransitionGraph g = build_transition_graph(two_node_net({0, 1}));
    REQUIRE(g.succ == std::vector<uint32_t>{0, 1, 2, 3});
    PrestigeResult p = prestige_scores(g);
    CHECK(p.converged);
    CHECK(p.iterations >= 1);
    for (double s : p.score) CHECK(s == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("prestige drains transients and concentrates on the cycle") {
    TransitionGraph g = build_transition_graph(testfix::xor_and_xnor_or());
    PrestigeResult p = prestige_scores(g);
    REQUIRE(p.score.size() == 16);

    double norm = 0;
    for (double s : p.score) {
        CHECK(s >= 0.0);
        norm += s * s;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));

    // all mass reaches the cycle within max_transient scatters, then stays there
    for (uint32_t s = 0; s < 16; ++s) {
        bool on_cycle = (s == 3 || s == 9 || s == 12);
        if (!on_cycle) CHECK(p.score[s] == 0.0);
    }
    uint32_t top = uint32_t(std::max_element(p.score.begin(), p.score.end()) - p.score.begin());
    CHECK((top == 3 || top == 9 || top == 12));
}

TEST_CASE("prestige may oscillate on balanced cycles without converging") {
    // 0 -> 1 -> 0 with a feeder 2 -> 0: the two-cycle keeps swapping unequal mass
    TransitionGraph g;
    g.n_nodes = 2;
    g.succ = {1, 0, 0, 3};
    PrestigeResult p = prestige_scores(g, 50);
    CHECK_FALSE(p.converged);
    CHECK(p.iterations == 50);
    CHECK(p.score[2] == 0.0);
    // mass keeps circulating inside {0, 1} plus the fixed point 3
    double norm = 0;
    for (double s : p.score) norm += s * s;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("adjacency matrix marks one successor per row") {
    TransitionGraph g = build_transition_graph(testfix::xor_and_xnor_or());
    BitMatrix adj = adjacency_matrix(g);
    CHECK(adj.rows() == 16);
    CHECK(adj.cols() == 16);
    CHECK(adj.count_ones() == 16);
    for (uint32_t s = 0; s < 16; ++s) CHECK(adj.get(s, g.succ[s]));
}
