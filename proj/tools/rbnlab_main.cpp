// rbnlab command line: drives the shared library through its C interface.
//
// Every subcommand takes --config/--set/--seed/--out, writes a run-manifest
// into the output directory first, then its own artifacts. Re-running with
// --config <dir>/run-manifest reproduces the outputs byte for byte.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbnlab.h"

namespace {

struct ConfigDeleter {
    void operator()(rbnlab_config* c) const { rbnlab_config_free(c); }
};
struct NetworkDeleter {
    void operator()(rbnlab_network* n) const { rbnlab_network_free(n); }
};
struct MatrixDeleter {
    void operator()(rbnlab_matrix* m) const { rbnlab_matrix_free(m); }
};
struct CtmDeleter {
    void operator()(rbnlab_ctm* t) const { rbnlab_ctm_free(t); }
};
struct TransitionDeleter {
    void operator()(rbnlab_transition* t) const { rbnlab_transition_free(t); }
};

using ConfigPtr = std::unique_ptr<rbnlab_config, ConfigDeleter>;
using NetworkPtr = std::unique_ptr<rbnlab_network, NetworkDeleter>;
using MatrixPtr = std::unique_ptr<rbnlab_matrix, MatrixDeleter>;
using CtmPtr = std::unique_ptr<rbnlab_ctm, CtmDeleter>;
using TransitionPtr = std::unique_ptr<rbnlab_transition, TransitionDeleter>;

// nonzero statuses map onto the exit-code contract: config/argument problems
// are 1, everything else 2
struct CliError {
    int exit_code;
    std::string message;
};

void check(rbnlab_status st, const char* doing) {
    if (st == RBNLAB_OK) return;
    int code = (st == RBNLAB_ERR_INVALID || st == RBNLAB_ERR_LIMIT) ? 1 : 2;
    throw CliError{code, std::string(doing) + ": " + rbnlab_last_error()};
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> sets;
    std::string seed;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-c,--config", args.config_path, "key=value config file");
    cmd->add_option("-o,--out", args.out_dir, "output directory")->required();
    cmd->add_option("-s,--set", args.sets, "override one config key (key=value, repeatable)");
    cmd->add_option("--seed", args.seed, "shorthand for --set master_seed=<value>");
}

ConfigPtr resolve_config(const CommonArgs& args) {
    ConfigPtr cfg(rbnlab_config_new());
    if (!cfg) throw CliError{2, "out of memory"};
    if (!args.config_path.empty())
        check(rbnlab_config_load(cfg.get(), args.config_path.c_str()), "loading config");
    for (const std::string& kv : args.sets) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw CliError{1, "--set needs key=value, got '" + kv + "'"};
        check(rbnlab_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()),
              "applying --set");
    }
    if (!args.seed.empty())
        check(rbnlab_config_set(cfg.get(), "master_seed", args.seed.c_str()), "applying --seed");
    return cfg;
}

std::string config_value(const rbnlab_config* cfg, const std::string& key) {
    size_t needed = 0;
    check(rbnlab_config_serialize(cfg, nullptr, 0, &needed), "reading config");
    std::string text(needed, '\0');
    check(rbnlab_config_serialize(cfg, text.data(), text.size(), &needed), "reading config");
    text.resize(needed - 1);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
        pos = end + 1;
    }
    throw CliError{2, "config key missing from serialization: " + key};
}

std::string prepare_out_dir(const rbnlab_config* cfg, const CommonArgs& args, const char* sub) {
    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) throw CliError{2, "cannot create output directory " + args.out_dir};
    std::string manifest = args.out_dir + "/run-manifest";
    check(rbnlab_config_write_manifest(cfg, sub, manifest.c_str()), "writing manifest");
    return args.out_dir + "/";
}

CtmPtr load_table(const rbnlab_config* cfg, const char* sub) {
    std::string path = config_value(cfg, "ctm_table");
    if (path.empty())
        throw CliError{1, std::string(sub) + " needs a complexity table: set ctm_table=<path>"};
    rbnlab_ctm* raw = nullptr;
    check(rbnlab_ctm_load(path.c_str(), &raw), "loading ctm table");
    return CtmPtr(raw);
}

uint32_t config_u32(const rbnlab_config* cfg, const std::string& key) {
    return uint32_t(std::stoul(config_value(cfg, key)));
}

void run_evolve(const CommonArgs& args) {
    ConfigPtr cfg = resolve_config(args);
    std::string out = prepare_out_dir(cfg.get(), args, "evolve");

    rbnlab_network* net_raw = nullptr;
    check(rbnlab_network_generate(cfg.get(), &net_raw), "generating network");
    NetworkPtr net(net_raw);
    check(rbnlab_network_save(net.get(), (out + "network.txt").c_str()), "saving network");

    rbnlab_matrix* m_raw = nullptr;
    check(rbnlab_network_evolve(net.get(), cfg.get(), &m_raw), "evolving");
    MatrixPtr diagram(m_raw);
    check(rbnlab_matrix_write_pbm(diagram.get(), (out + "diagram.pbm").c_str()), "writing diagram");

    if (!config_value(cfg.get(), "ctm_table").empty()) {
        CtmPtr table = load_table(cfg.get(), "evolve");
        check(rbnlab_measure_report_csv(diagram.get(), table.get(), (out + "report.csv").c_str()),
              "writing report");
    }
}

void run_sweep(const CommonArgs& args) {
    ConfigPtr cfg = resolve_config(args);
    std::string out = prepare_out_dir(cfg.get(), args, "sweep");
    CtmPtr table = load_table(cfg.get(), "sweep");
    check(rbnlab_sweep_csv(cfg.get(), table.get(), (out + "points.csv").c_str(),
                           (out + "summary.csv").c_str()),
          "running sweep");
}

void run_transition(const CommonArgs& args) {
    ConfigPtr cfg = resolve_config(args);
    std::string out = prepare_out_dir(cfg.get(), args, "transition-graph");

    rbnlab_network* net_raw = nullptr;
    check(rbnlab_network_generate(cfg.get(), &net_raw), "generating network");
    NetworkPtr net(net_raw);

    rbnlab_transition* t_raw = nullptr;
    check(rbnlab_transition_build(net.get(), config_u32(cfg.get(), "max_nodes"), &t_raw),
          "building transition diagram");
    TransitionPtr graph(t_raw);

    check(rbnlab_transition_successor_csv(graph.get(), (out + "successors.csv").c_str()),
          "writing successors");
    check(rbnlab_transition_attractor_report(graph.get(), (out + "attractors.txt").c_str()),
          "writing attractors");
    check(rbnlab_transition_prestige_csv(graph.get(), (out + "prestige.csv").c_str()),
          "writing prestige");
}

void run_perturb(const CommonArgs& args) {
    ConfigPtr cfg = resolve_config(args);
    std::string out = prepare_out_dir(cfg.get(), args, "perturb");
    CtmPtr table = load_table(cfg.get(), "perturb");

    rbnlab_network* net_raw = nullptr;
    check(rbnlab_network_generate(cfg.get(), &net_raw), "generating network");
    NetworkPtr net(net_raw);

    rbnlab_transition* t_raw = nullptr;
    check(rbnlab_transition_build(net.get(), config_u32(cfg.get(), "max_nodes"), &t_raw),
          "building transition diagram");
    TransitionPtr graph(t_raw);

    check(rbnlab_perturb_csv(graph.get(), table.get(), config_value(cfg.get(), "mode").c_str(),
                             config_u32(cfg.get(), "count"),
                             config_value(cfg.get(), "disconnect").c_str(),
                             (out + "perturb.csv").c_str()),
          "running perturbations");
}

void run_ctm_gen(const CommonArgs& args) {
    ConfigPtr cfg = resolve_config(args);
    std::string out = prepare_out_dir(cfg.get(), args, "ctm-gen");
    uint32_t states = config_u32(cfg.get(), "states");
    uint32_t step_cap = config_u32(cfg.get(), "step_cap");
    uint32_t side = config_u32(cfg.get(), "square_side");

    rbnlab_ctm* str_raw = nullptr;
    check(rbnlab_ctm_enumerate(states, step_cap, &str_raw), "enumerating machines");
    CtmPtr string_table(str_raw);
    std::string str_path = out + "ctm-string" + std::to_string(states) + ".txt";
    check(rbnlab_ctm_save(string_table.get(), str_path.c_str()), "saving string table");

    if (side > 0) {
        rbnlab_ctm* sq_raw = nullptr;
        check(rbnlab_ctm_compose_square(string_table.get(), side, &sq_raw),
              "composing square table");
        CtmPtr square(sq_raw);
        std::string sq_path = out + "ctm-square" + std::to_string(side) + ".txt";
        check(rbnlab_ctm_save(square.get(), sq_path.c_str()), "saving square table");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random Boolean network measurement lab"};
    app.set_version_flag("--version", rbnlab_version());
    app.require_subcommand(1);

    CommonArgs evolve_args, sweep_args, transition_args, perturb_args, ctm_args;
    add_common(app.add_subcommand("evolve", "run one network and image its trajectory"),
               evolve_args);
    add_common(app.add_subcommand("sweep", "randomness measures across a bias grid"), sweep_args);
    add_common(app.add_subcommand("transition-graph",
                                  "full state-space successors, attractors, prestige"),
               transition_args);
    add_common(app.add_subcommand("perturb", "prestige-guided node removal series"), perturb_args);
    add_common(app.add_subcommand("ctm-gen", "enumerate small machines into a complexity table"),
               ctm_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("evolve")) run_evolve(evolve_args);
        else if (app.got_subcommand("sweep")) run_sweep(sweep_args);
        else if (app.got_subcommand("transition-graph")) run_transition(transition_args);
        else if (app.got_subcommand("perturb")) run_perturb(perturb_args);
        else if (app.got_subcommand("ctm-gen")) run_ctm_gen(ctm_args);
    } catch (const CliError& e) {
        std::fprintf(stderr, "rbnlab: %s\n", e.message.c_str());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "rbnlab: %s\n", e.what());
        return 2;
    }
    return 0;
}
