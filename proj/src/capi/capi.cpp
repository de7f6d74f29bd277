#include "rbnlab.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/emit.hpp"
#include "core/experiments.hpp"
#include "core/measures.hpp"
#include "core/ctm_enum.hpp"
#include "core/network.hpp"
#include "core/perturb.hpp"
#include "core/run_config.hpp"
#include "core/transition.hpp"

using namespace rbnlab;

struct rbnlab_config {
    RunConfig c;
};
struct rbnlab_network {
    BooleanNetwork n;
};
struct rbnlab_matrix {
    BitMatrix m;
};
struct rbnlab_ctm {
    CtmTable t;
};
struct rbnlab_transition {
    TransitionGraph g;
};

namespace {

thread_local std::string tl_error;

template <typename Fn> rbnlab_status guarded(Fn&& fn) {
    try {
        fn();
        return RBNLAB_OK;
    } catch (const std::length_error& e) {
        tl_error = e.what();
        return RBNLAB_ERR_LIMIT;
    } catch (const std::invalid_argument& e) {
        tl_error = e.what();
        return RBNLAB_ERR_INVALID;
    } catch (const std::out_of_range& e) {
        tl_error = e.what();
        return RBNLAB_ERR_INVALID;
    } catch (const std::runtime_error& e) {
        tl_error = e.what();
        return RBNLAB_ERR_IO;
    } catch (const std::bad_alloc&) {
        tl_error = "out of memory";
        return RBNLAB_ERR_LIMIT;
    } catch (const std::exception& e) {
        tl_error = e.what();
        return RBNLAB_ERR_RUNTIME;
    }
}

rbnlab_status need(bool ok, const char* what) {
    if (ok) return RBNLAB_OK;
    tl_error = what;
    return RBNLAB_ERR_INVALID;
}

#define REQUIRE(cond, what)                                                                        \
    do {                                                                                           \
        if (!(cond)) return need(false, what);                                                     \
    } while (0)

RbnParams params_from(const RunConfig& c) {
    RbnParams p;
    p.n_nodes = c.sweep.n_nodes;
    p.in_degree = c.sweep.in_degrees.at(0);
    p.bias = c.bias;
    p.wiring = c.sweep.wiring;
    p.wiring_p = c.sweep.wiring_p;
    return p;
}

} // namespace

extern "C" {

const char* rbnlab_version(void) { return "1.0.0"; }

const char* rbnlab_last_error(void) { return tl_error.c_str(); }

rbnlab_config* rbnlab_config_new(void) { return new (std::nothrow) rbnlab_config{}; }

void rbnlab_config_free(rbnlab_config* cfg) { delete cfg; }

rbnlab_status rbnlab_config_load(rbnlab_config* cfg, const char* path) {
    REQUIRE(cfg && path, "null argument");
    return guarded([&] {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error(std::string("cannot open config: ") + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        // layered over current values so CLI overrides can both precede and
        // follow the file without resetting each other
        RunConfig merged = cfg->c;
        merge_config_text(merged, ss.str());
        cfg->c = merged;
    });
}

rbnlab_status rbnlab_config_set(rbnlab_config* cfg, const char* key, const char* value) {
    REQUIRE(cfg && key && value, "null argument");
    return guarded([&] { apply_config_entry(cfg->c, key, value); });
}

rbnlab_status rbnlab_config_serialize(const rbnlab_config* cfg, char* buf, size_t cap,
                                      size_t* needed) {
    REQUIRE(cfg && needed, "null argument");
    return guarded([&] {
        std::string s = serialize_config(cfg->c);
        *needed = s.size() + 1;
        if (buf && cap > 0) {
            size_t n = s.size() + 1 < cap ? s.size() + 1 : cap;
            std::memcpy(buf, s.c_str(), n);
            buf[n - 1] = '\0';
        }
    });
}

rbnlab_status rbnlab_config_write_manifest(const rbnlab_config* cfg, const char* subcommand,
                                           const char* path) {
    REQUIRE(cfg && subcommand && path, "null argument");
    return guarded([&] { write_manifest(cfg->c, subcommand, path); });
}

rbnlab_status rbnlab_network_generate(const rbnlab_config* cfg, rbnlab_network** out) {
    REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        auto* h = new rbnlab_network{generate_network(params_from(cfg->c), cfg->c.sweep.master_seed)};
        *out = h;
    });
}

rbnlab_status rbnlab_network_load(const char* path, rbnlab_network** out) {
    REQUIRE(path && out, "null argument");
    return guarded([&] { *out = new rbnlab_network{load_network(path)}; });
}

rbnlab_status rbnlab_network_save(const rbnlab_network* net, const char* path) {
    REQUIRE(net && path, "null argument");
    return guarded([&] { save_network(net->n, path); });
}

void rbnlab_network_free(rbnlab_network* net) { delete net; }

rbnlab_status rbnlab_network_evolve(const rbnlab_network* net, const rbnlab_config* cfg,
                                    rbnlab_matrix** out) {
    REQUIRE(net && cfg && out, "null argument");
    return guarded([&] {
        RngStream rng = derive_stream(cfg->c.sweep.master_seed, stream_id(stream_role::initial_state));
        std::vector<uint8_t> init = random_state(net->n.params.n_nodes, rng);
        *out = new rbnlab_matrix{evolve(net->n, init, cfg->c.sweep.steps)};
    });
}

rbnlab_status rbnlab_matrix_dims(const rbnlab_matrix* m, uint64_t* rows, uint64_t* cols) {
    REQUIRE(m && rows && cols, "null argument");
    *rows = m->m.rows();
    *cols = m->m.cols();
    return RBNLAB_OK;
}

rbnlab_status rbnlab_matrix_get(const rbnlab_matrix* m, uint64_t row, uint64_t col, int* out) {
    REQUIRE(m && out, "null argument");
    REQUIRE(row < m->m.rows() && col < m->m.cols(), "matrix index out of range");
    *out = m->m.get(row, col) ? 1 : 0;
    return RBNLAB_OK;
}

rbnlab_status rbnlab_matrix_write_pbm(const rbnlab_matrix* m, const char* path) {
    REQUIRE(m && path, "null argument");
    return guarded([&] { write_pbm(m->m, path); });
}

void rbnlab_matrix_free(rbnlab_matrix* m) { delete m; }

rbnlab_status rbnlab_ctm_load(const char* path, rbnlab_ctm** out) {
    REQUIRE(path && out, "null argument");
    return guarded([&] { *out = new rbnlab_ctm{load_ctm_table(path)}; });
}

rbnlab_status rbnlab_ctm_save(const rbnlab_ctm* t, const char* path) {
    REQUIRE(t && path, "null argument");
    return guarded([&] { save_ctm_table(t->t, path); });
}

rbnlab_status rbnlab_ctm_enumerate(uint32_t n_states, uint32_t step_cap, rbnlab_ctm** out) {
    REQUIRE(out, "null argument");
    return guarded([&] {
        FrequencyDistribution f = build_frequency_distribution(n_states, step_cap);
        *out = new rbnlab_ctm{ctm_from_frequency(f)};
    });
}

rbnlab_status rbnlab_ctm_compose_square(const rbnlab_ctm* string_table, uint32_t side,
                                        rbnlab_ctm** out) {
    REQUIRE(string_table && out, "null argument");
    return guarded([&] { *out = new rbnlab_ctm{compose_square_table(string_table->t, side)}; });
}

rbnlab_status rbnlab_ctm_info(const rbnlab_ctm* t, int* shape_out, uint32_t* size_out) {
    REQUIRE(t && shape_out && size_out, "null argument");
    *shape_out = t->t.shape == BlockShape::String ? 0 : 1;
    *size_out = t->t.size;
    return RBNLAB_OK;
}

rbnlab_status rbnlab_ctm_lookup(const rbnlab_ctm* t, const char* block, double* out) {
    REQUIRE(t && block && out, "null argument");
    return guarded([&] { *out = t->t.lookup(block); });
}

void rbnlab_ctm_free(rbnlab_ctm* t) { delete t; }

rbnlab_status rbnlab_measure_matrix(const rbnlab_matrix* m, const rbnlab_ctm* table,
                                    double* entropy, double* lzw_rate, double* bdm) {
    REQUIRE(m && table && entropy && lzw_rate && bdm, "null argument");
    return guarded([&] {
        RandomnessReport r = randomness_report(m->m, table->t);
        *entropy = r.entropy;
        *lzw_rate = r.lzw_rate;
        *bdm = r.bdm;
    });
}

rbnlab_status rbnlab_measure_report_csv(const rbnlab_matrix* m, const rbnlab_ctm* table,
                                        const char* path) {
    REQUIRE(m && table && path, "null argument");
    return guarded([&] { write_report_csv(randomness_report(m->m, table->t), path); });
}

rbnlab_status rbnlab_transition_build(const rbnlab_network* net, uint32_t max_nodes,
                                      rbnlab_transition** out) {
    REQUIRE(net && out, "null argument");
    return guarded([&] { *out = new rbnlab_transition{build_transition_graph(net->n, max_nodes)}; });
}

rbnlab_status rbnlab_transition_states(const rbnlab_transition* t, uint64_t* out) {
    REQUIRE(t && out, "null argument");
    *out = t->g.state_count();
    return RBNLAB_OK;
}

rbnlab_status rbnlab_transition_successor(const rbnlab_transition* t, uint64_t state,
                                          uint64_t* out) {
    REQUIRE(t && out, "null argument");
    REQUIRE(state < t->g.state_count(), "state out of range");
    *out = t->g.succ[state];
    return RBNLAB_OK;
}

rbnlab_status rbnlab_transition_adjacency(const rbnlab_transition* t, rbnlab_matrix** out) {
    REQUIRE(t && out, "null argument");
    return guarded([&] { *out = new rbnlab_matrix{adjacency_matrix(t->g)}; });
}

rbnlab_status rbnlab_transition_successor_csv(const rbnlab_transition* t, const char* path) {
    REQUIRE(t && path, "null argument");
    return guarded([&] { write_successor_csv(t->g, path); });
}

rbnlab_status rbnlab_transition_attractor_report(const rbnlab_transition* t, const char* path) {
    REQUIRE(t && path, "null argument");
    return guarded([&] { write_attractor_report(find_attractors(t->g), path); });
}

rbnlab_status rbnlab_transition_prestige_csv(const rbnlab_transition* t, const char* path) {
    REQUIRE(t && path, "null argument");
    return guarded([&] { write_prestige_csv(prestige_scores(t->g), path); });
}

void rbnlab_transition_free(rbnlab_transition* t) { delete t; }

rbnlab_status rbnlab_perturb_csv(const rbnlab_transition* t, const rbnlab_ctm* table,
                                 const char* mode, uint32_t count, const char* disconnect,
                                 const char* path) {
    REQUIRE(t && table && mode && disconnect && path, "null argument");
    PerturbMode pm;
    if (std::strcmp(mode, "most") == 0) pm = PerturbMode::MostRelevant;
    else if (std::strcmp(mode, "least") == 0) pm = PerturbMode::LeastRelevant;
    else return need(false, "mode must be most or least");
    DisconnectMode dm;
    if (std::strcmp(disconnect, "remove") == 0) dm = DisconnectMode::Remove;
    else if (std::strcmp(disconnect, "isolate") == 0) dm = DisconnectMode::Isolate;
    else return need(false, "disconnect must be remove or isolate");
    return guarded([&] { write_perturb_csv(perturbation_series(t->g, table->t, pm, count, dm), path); });
}

rbnlab_status rbnlab_sweep_csv(const rbnlab_config* cfg, const rbnlab_ctm* table,
                               const char* points_path, const char* summary_path) {
    REQUIRE(cfg && table && points_path && summary_path, "null argument");
    return guarded([&] {
        std::vector<SweepSeries> series = run_sweeps(cfg->c.sweep, table->t);
        write_points_csv(series, points_path);
        write_summary_csv(series, summary_path);
    });
}

} // extern "C"
