#ifndef RBNLAB_H
#define RBNLAB_H

/* C interface to the rbnlab core: random Boolean networks, randomness
 * measures (entropy, LZW rate, block-decomposition complexity), small-machine
 * enumeration tables, transition diagrams, and perturbation analysis.
 *
 * All functions returning rbnlab_status set a thread-local message readable
 * through rbnlab_last_error() on failure. Out-parameters are written only on
 * RBNLAB_OK. Every handle type has a matching _free that accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(RBNLAB_BUILD)
#define RBNLAB_API __attribute__((visibility("default")))
#else
#define RBNLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    RBNLAB_OK = 0,
    RBNLAB_ERR_INVALID = 1, /* bad argument, config, or file content */
    RBNLAB_ERR_LIMIT = 2,   /* request exceeds a documented size bound */
    RBNLAB_ERR_IO = 3,      /* file missing, unreadable, or unwritable */
    RBNLAB_ERR_RUNTIME = 4  /* anything else */
} rbnlab_status;

RBNLAB_API const char* rbnlab_version(void);
RBNLAB_API const char* rbnlab_last_error(void);

/* ---- configuration ----------------------------------------------------- */

typedef struct rbnlab_config rbnlab_config;

RBNLAB_API rbnlab_config* rbnlab_config_new(void);
RBNLAB_API void rbnlab_config_free(rbnlab_config* cfg);

/* Merge key=value lines from a file over the current values. */
RBNLAB_API rbnlab_status rbnlab_config_load(rbnlab_config* cfg, const char* path);
/* Set a single key, same schema and validation as the file format. */
RBNLAB_API rbnlab_status rbnlab_config_set(rbnlab_config* cfg, const char* key, const char* value);
/* Canonical key=value serialization of the resolved config. Writes up to cap
 * bytes including the terminator; *needed gets the full size. */
RBNLAB_API rbnlab_status rbnlab_config_serialize(const rbnlab_config* cfg, char* buf, size_t cap,
                                                 size_t* needed);
/* Re-runnable record of a run: subcommand comment + full config. */
RBNLAB_API rbnlab_status rbnlab_config_write_manifest(const rbnlab_config* cfg,
                                                      const char* subcommand, const char* path);

/* ---- networks ----------------------------------------------------------- */

typedef struct rbnlab_network rbnlab_network;

/* Build the network named by the config: n_nodes, first in-degree, bias,
 * wiring distribution, master_seed. */
RBNLAB_API rbnlab_status rbnlab_network_generate(const rbnlab_config* cfg, rbnlab_network** out);
RBNLAB_API rbnlab_status rbnlab_network_load(const char* path, rbnlab_network** out);
RBNLAB_API rbnlab_status rbnlab_network_save(const rbnlab_network* net, const char* path);
RBNLAB_API void rbnlab_network_free(rbnlab_network* net);

/* ---- bit matrices -------------------------------------------------------- */

typedef struct rbnlab_matrix rbnlab_matrix;

/* Trajectory of the config's steps rows, starting from the seeded initial
 * state: row 0 is the initial state, each next row its successor. */
RBNLAB_API rbnlab_status rbnlab_network_evolve(const rbnlab_network* net, const rbnlab_config* cfg,
                                               rbnlab_matrix** out);
RBNLAB_API rbnlab_status rbnlab_matrix_dims(const rbnlab_matrix* m, uint64_t* rows,
                                            uint64_t* cols);
RBNLAB_API rbnlab_status rbnlab_matrix_get(const rbnlab_matrix* m, uint64_t row, uint64_t col,
                                           int* out);
/* Plain PBM (P1) image, one matrix row per image row. */
RBNLAB_API rbnlab_status rbnlab_matrix_write_pbm(const rbnlab_matrix* m, const char* path);
RBNLAB_API void rbnlab_matrix_free(rbnlab_matrix* m);

/* ---- complexity tables ---------------------------------------------------- */

typedef struct rbnlab_ctm rbnlab_ctm;

RBNLAB_API rbnlab_status rbnlab_ctm_load(const char* path, rbnlab_ctm** out);
RBNLAB_API rbnlab_status rbnlab_ctm_save(const rbnlab_ctm* t, const char* path);
/* Enumerate every n_states-state binary Turing machine (n_states in 1..3),
 * run each on both blank tapes for at most step_cap transitions, and turn the
 * halt-output frequencies into a string table. */
RBNLAB_API rbnlab_status rbnlab_ctm_enumerate(uint32_t n_states, uint32_t step_cap,
                                              rbnlab_ctm** out);
/* Square table over all side x side blocks (side in 1..4), each block scored
 * by the 1D block decomposition of its rows against the string table. */
RBNLAB_API rbnlab_status rbnlab_ctm_compose_square(const rbnlab_ctm* string_table, uint32_t side,
                                                   rbnlab_ctm** out);
/* shape_out: 0 = string, 1 = square; size_out: max block length / side. */
RBNLAB_API rbnlab_status rbnlab_ctm_info(const rbnlab_ctm* t, int* shape_out, uint32_t* size_out);
RBNLAB_API rbnlab_status rbnlab_ctm_lookup(const rbnlab_ctm* t, const char* block, double* out);
RBNLAB_API void rbnlab_ctm_free(rbnlab_ctm* t);

/* ---- measures ------------------------------------------------------------ */

/* Entropy, LZW rate, and block-decomposition complexity of a matrix. The
 * table must be a square table; its side sets the block size. */
RBNLAB_API rbnlab_status rbnlab_measure_matrix(const rbnlab_matrix* m, const rbnlab_ctm* table,
                                               double* entropy, double* lzw_rate, double* bdm);
RBNLAB_API rbnlab_status rbnlab_measure_report_csv(const rbnlab_matrix* m, const rbnlab_ctm* table,
                                                   const char* path);

/* ---- transition diagrams -------------------------------------------------- */

typedef struct rbnlab_transition rbnlab_transition;

/* Successor map over all 2^N states; refuses networks above max_nodes. */
RBNLAB_API rbnlab_status rbnlab_transition_build(const rbnlab_network* net, uint32_t max_nodes,
                                                 rbnlab_transition** out);
RBNLAB_API rbnlab_status rbnlab_transition_states(const rbnlab_transition* t, uint64_t* out);
RBNLAB_API rbnlab_status rbnlab_transition_successor(const rbnlab_transition* t, uint64_t state,
                                                     uint64_t* out);
RBNLAB_API rbnlab_status rbnlab_transition_adjacency(const rbnlab_transition* t,
                                                     rbnlab_matrix** out);
RBNLAB_API rbnlab_status rbnlab_transition_successor_csv(const rbnlab_transition* t,
                                                         const char* path);
RBNLAB_API rbnlab_status rbnlab_transition_attractor_report(const rbnlab_transition* t,
                                                            const char* path);
RBNLAB_API rbnlab_status rbnlab_transition_prestige_csv(const rbnlab_transition* t,
                                                        const char* path);
RBNLAB_API void rbnlab_transition_free(rbnlab_transition* t);

/* ---- perturbation ---------------------------------------------------------- */

/* Rank states by prestige, take the `count` most ("most") or least ("least")
 * prestigious, measure the diagram with each taken out (disconnect = "remove"
 * or "isolate"), and write the series CSV. */
RBNLAB_API rbnlab_status rbnlab_perturb_csv(const rbnlab_transition* t, const rbnlab_ctm* table,
                                            const char* mode, uint32_t count,
                                            const char* disconnect, const char* path);

/* ---- sweeps ----------------------------------------------------------------- */

/* Run the configured bias sweep (all in-degrees) and write the per-point CSV
 * and the per-k critical-point summary CSV. */
RBNLAB_API rbnlab_status rbnlab_sweep_csv(const rbnlab_config* cfg, const rbnlab_ctm* table,
                                          const char* points_path, const char* summary_path);

#ifdef __cplusplus
}
#endif

#endif /* RBNLAB_H */
