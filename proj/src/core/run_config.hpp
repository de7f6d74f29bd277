#pragma once

#include <cstdint>
#include <string>

#include "core/experiments.hpp"

namespace rbnlab {

// Everything the command-line surface can be told, one flat key=value schema
// shared by all subcommands; each subcommand reads the keys it cares about.
struct RunConfig {
    SweepConfig sweep;
    double bias = 0.5;          // single-network runs rule the truth tables with this
    std::string ctm_table;      // path to a saved table; required by measuring runs
    std::string mode = "most";  // perturbation target: most | least
    uint32_t count = 20;        // perturbations per series
    std::string disconnect = "remove"; // remove | isolate
    uint32_t states = 3;        // machine states for table enumeration
    uint32_t step_cap = 500;
    uint32_t max_nodes = 20;    // transition diagrams refuse networks above this
    uint32_t square_side = 4;   // composed square table side, 0 = keep string table
};

// Assign one key. Throws std::invalid_argument naming the key on unknown
// keys, type mismatches, and out-of-range values.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// key=value lines, '#' starts a comment, blank lines ignored. Errors carry
// the 1-based line number. The merge form layers the text over cfg's current
// values; the others start from defaults.
void merge_config_text(RunConfig& cfg, const std::string& text);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Canonical serialization: every key in fixed order. parse(serialize(c))
// reproduces c, which is what makes manifests re-runnable.
std::string serialize_config(const RunConfig& cfg);

// Manifest = comment header naming the subcommand + the full resolved config.
void write_manifest(const RunConfig& cfg, const std::string& subcommand, const std::string& path);

} // namespace rbnlab
