#include "core/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbnlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw std::invalid_argument("key '" + key + "': " + what);
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
    uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) bad(key, "expected an unsigned integer");
    return out;
}

uint32_t parse_u32(const std::string& key, const std::string& v, uint32_t lo, uint32_t hi) {
    uint64_t out = parse_u64(key, v);
    if (out < lo || out > hi)
        bad(key, "value " + v + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return uint32_t(out);
}

double parse_unit(const std::string& key, const std::string& v) {
    double out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) bad(key, "expected a number");
    if (!(out >= 0 && out <= 1)) bad(key, "value " + v + " outside [0, 1]");
    return out;
}

bool parse_flag(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    bad(key, "expected true or false");
}

std::vector<uint32_t> parse_degree_list(const std::string& key, const std::string& v) {
    std::vector<uint32_t> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_u32(key, trim(item), 1, 20));
    if (out.empty()) bad(key, "expected at least one in-degree");
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_nodes") cfg.sweep.n_nodes = parse_u32(key, value, 1, 1000000);
    else if (key == "in_degree" || key == "in_degrees")
        cfg.sweep.in_degrees = parse_degree_list(key, value);
    else if (key == "bias") cfg.bias = parse_unit(key, value);
    else if (key == "p_min") cfg.sweep.p_min = parse_unit(key, value);
    else if (key == "p_max") cfg.sweep.p_max = parse_unit(key, value);
    else if (key == "p_points") cfg.sweep.p_points = parse_u32(key, value, 2, 100000);
    else if (key == "steps") cfg.sweep.steps = parse_u32(key, value, 1, 1000000);
    else if (key == "samples") cfg.sweep.samples = parse_u32(key, value, 1, 100000);
    else if (key == "master_seed") cfg.sweep.master_seed = parse_u64(key, value);
    else if (key == "wiring") {
        if (value == "uniform") cfg.sweep.wiring = WiringDist::Uniform;
        else if (value == "binomial") cfg.sweep.wiring = WiringDist::Binomial;
        else bad(key, "expected uniform or binomial");
    } else if (key == "wiring_p") cfg.sweep.wiring_p = parse_unit(key, value);
    else if (key == "shared_wiring") cfg.sweep.shared_wiring = parse_flag(key, value);
    else if (key == "shared_initial") cfg.sweep.shared_initial = parse_flag(key, value);
    else if (key == "ctm_table") cfg.ctm_table = value;
    else if (key == "mode") {
        if (value != "most" && value != "least") bad(key, "expected most or least");
        cfg.mode = value;
    } else if (key == "count") cfg.count = parse_u32(key, value, 0, 1u << 20);
    else if (key == "disconnect") {
        if (value != "remove" && value != "isolate") bad(key, "expected remove or isolate");
        cfg.disconnect = value;
    } else if (key == "states") cfg.states = parse_u32(key, value, 1, 3);
    else if (key == "step_cap") cfg.step_cap = parse_u32(key, value, 1, 100000);
    else if (key == "max_nodes") cfg.max_nodes = parse_u32(key, value, 1, 30);
    else if (key == "square_side") cfg.square_side = parse_u32(key, value, 0, 4);
    else bad(key, "unknown key");
}

void merge_config_text(RunConfig& cfg, const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        try {
            apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    merge_config_text(cfg, text);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open config: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + "=" + v + "\n"; };
    kv("n_nodes", std::to_string(cfg.sweep.n_nodes));
    std::string degrees;
    for (uint32_t k : cfg.sweep.in_degrees) {
        if (!degrees.empty()) degrees += ',';
        degrees += std::to_string(k);
    }
    kv("in_degrees", degrees);
    kv("bias", format_double(cfg.bias));
    kv("p_min", format_double(cfg.sweep.p_min));
    kv("p_max", format_double(cfg.sweep.p_max));
    kv("p_points", std::to_string(cfg.sweep.p_points));
    kv("steps", std::to_string(cfg.sweep.steps));
    kv("samples", std::to_string(cfg.sweep.samples));
    kv("master_seed", std::to_string(cfg.sweep.master_seed));
    kv("wiring", cfg.sweep.wiring == WiringDist::Uniform ? "uniform" : "binomial");
    kv("wiring_p", format_double(cfg.sweep.wiring_p));
    kv("shared_wiring", cfg.sweep.shared_wiring ? "true" : "false");
    kv("shared_initial", cfg.sweep.shared_initial ? "true" : "false");
    kv("ctm_table", cfg.ctm_table);
    kv("mode", cfg.mode);
    kv("count", std::to_string(cfg.count));
    kv("disconnect", cfg.disconnect);
    kv("states", std::to_string(cfg.states));
    kv("step_cap", std::to_string(cfg.step_cap));
    kv("max_nodes", std::to_string(cfg.max_nodes));
    kv("square_side", std::to_string(cfg.square_side));
    return out;
}

void write_manifest(const RunConfig& cfg, const std::string& subcommand, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "# rbnlab run manifest\n# subcommand=" << subcommand << "\n" << serialize_config(cfg);
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace rbnlab
