#include "beliefnet.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "analysis/analysis.hpp"
#include "core/dump.hpp"
#include "core/network.hpp"
#include "engine/config.hpp"
#include "engine/engine.hpp"
#include "experiments/experiments.hpp"

using namespace beliefnet;

struct bn_config {
    SimConfig cfg;
};

struct bn_network {
    SignedNetwork net;
};

struct bn_sim_result {
    bn_network net_holder;  // borrowed handle returned by bn_result_network
    std::vector<beliefnet::engine::CycleReport> trace;
};

struct bn_histogram {
    analysis::DegreeHistogram hist;
    std::vector<std::pair<std::uint64_t, double>> bins;  // flattened, k-ascending
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translates C++ failures into status codes, remembering the message.
template <class Fn>
bn_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what());
        return BN_ERR_PARSE;
    } catch (const ConfigError& e) {
        set_error(e.what());
        return BN_ERR_CONFIG;
    } catch (const ContractViolation& e) {
        set_error(e.what());
        return BN_ERR_INVALID_ARGUMENT;
    } catch (const InsufficientData& e) {
        set_error(e.what());
        return BN_ERR_INSUFFICIENT_DATA;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BN_ERR_RUNTIME;
    }
}

bn_status require(bool ok, const char* message) {
    if (ok) return BN_OK;
    set_error(message);
    return BN_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* bn_version(void) { return "0.1.0"; }

const char* bn_last_error(void) { return g_last_error.c_str(); }

void bn_string_free(char* s) { std::free(s); }

/* --- configuration ----------------------------------------------------- */

bn_status bn_config_default(bn_config** out) {
    if (bn_status st = require(out != nullptr, "out must not be null")) return st;
    *out = new bn_config{};
    return BN_OK;
}

bn_status bn_config_load_file(const char* path, bn_config** out) {
    if (bn_status st = require(path && out, "path and out must not be null")) return st;
    return guarded([&] {
        if (!std::filesystem::exists(path)) {
            set_error(std::string("config file '") + path + "' does not exist");
            return BN_ERR_IO;
        }
        *out = new bn_config{load_config_file(path)};
        return BN_OK;
    });
}

bn_status bn_config_parse(const char* json_text, bn_config** out) {
    if (bn_status st = require(json_text && out, "json_text and out must not be null"))
        return st;
    return guarded([&] {
        *out = new bn_config{parse_config_json(json_text)};
        return BN_OK;
    });
}

bn_status bn_config_set(bn_config* cfg, const char* key, const char* value) {
    if (bn_status st = require(cfg && key && value, "cfg, key and value must not be null"))
        return st;
    return guarded([&] {
        apply_config_override(cfg->cfg, key, value);
        return BN_OK;
    });
}

bn_status bn_config_to_json(const bn_config* cfg, char** out) {
    if (bn_status st = require(cfg && out, "cfg and out must not be null")) return st;
    return guarded([&] {
        *out = dup_string(config_to_json(cfg->cfg));
        return *out ? BN_OK : BN_ERR_RUNTIME;
    });
}

bn_status bn_config_warnings(const bn_config* cfg, char** out) {
    if (bn_status st = require(cfg && out, "cfg and out must not be null")) return st;
    return guarded([&] {
        std::string joined;
        for (const auto& w : cfg->cfg.warnings()) {
            joined += w;
            joined += '\n';
        }
        *out = dup_string(joined);
        return *out ? BN_OK : BN_ERR_RUNTIME;
    });
}

void bn_config_free(bn_config* cfg) { delete cfg; }

/* --- simulation --------------------------------------------------------- */

bn_status bn_simulate(const bn_config* cfg, bn_sim_result** out) {
    if (bn_status st = require(cfg && out, "cfg and out must not be null")) return st;
    return guarded([&] {
        engine::SimResult r = engine::run_simulation(cfg->cfg);
        *out = new bn_sim_result{bn_network{std::move(r.net)}, std::move(r.trace)};
        return BN_OK;
    });
}

const bn_network* bn_result_network(const bn_sim_result* result) {
    return result ? &result->net_holder : nullptr;
}

size_t bn_result_cycle_count(const bn_sim_result* result) {
    return result ? result->trace.size() : 0;
}

bn_status bn_result_cycle(const bn_sim_result* result, size_t index, bn_cycle_report* out) {
    if (bn_status st = require(result && out, "result and out must not be null")) return st;
    if (bn_status st = require(index < result->trace.size(), "cycle index out of range"))
        return st;
    const engine::CycleReport& r = result->trace[index];
    out->cycle = r.cycle;
    out->attached = r.attached ? 1 : 0;
    out->time_used = r.time_used;
    out->removed_count = r.removed_count;
    out->n_vertices = r.n_vertices;
    out->n_edges = r.n_edges;
    return BN_OK;
}

void bn_result_free(bn_sim_result* result) { delete result; }

/* --- networks ------------------------------------------------------------ */

bn_status bn_network_load_file(const char* path, bn_network** out) {
    if (bn_status st = require(path && out, "path and out must not be null")) return st;
    return guarded([&] {
        if (!std::filesystem::exists(path)) {
            set_error(std::string("network file '") + path + "' does not exist");
            return BN_ERR_IO;
        }
        *out = new bn_network{load_network_file(path)};
        return BN_OK;
    });
}

bn_status bn_network_save_file(const bn_network* net, const char* path) {
    if (bn_status st = require(net && path, "net and path must not be null")) return st;
    return guarded([&] {
        save_network_file(net->net, path);
        return BN_OK;
    });
}

bn_status bn_network_dump(const bn_network* net, char** out) {
    if (bn_status st = require(net && out, "net and out must not be null")) return st;
    return guarded([&] {
        *out = dup_string(dump_network(net->net));
        return *out ? BN_OK : BN_ERR_RUNTIME;
    });
}

size_t bn_network_vertex_count(const bn_network* net) {
    return net ? net->net.n_vertices() : 0;
}

size_t bn_network_edge_count(const bn_network* net) { return net ? net->net.n_edges() : 0; }

void bn_network_free(bn_network* net) { delete net; }

/* --- analysis ------------------------------------------------------------ */

bn_status bn_histogram_compute(const bn_network* net, bn_histogram** out) {
    if (bn_status st = require(net && out, "net and out must not be null")) return st;
    return guarded([&] {
        auto* hist = new bn_histogram{analysis::degree_distribution(net->net), {}};
        hist->bins.assign(hist->hist.probs.begin(), hist->hist.probs.end());
        *out = hist;
        return BN_OK;
    });
}

size_t bn_histogram_size(const bn_histogram* hist) { return hist ? hist->bins.size() : 0; }

bn_status bn_histogram_bin(const bn_histogram* hist, size_t index, uint64_t* k, double* p) {
    if (bn_status st = require(hist && k && p, "hist, k and p must not be null")) return st;
    if (bn_status st = require(index < hist->bins.size(), "bin index out of range")) return st;
    *k = hist->bins[index].first;
    *p = hist->bins[index].second;
    return BN_OK;
}

bn_status bn_histogram_default_window(const bn_histogram* hist, uint64_t* k_min,
                                      uint64_t* k_max) {
    if (bn_status st = require(hist && k_min && k_max, "arguments must not be null")) return st;
    const auto [lo, hi] = analysis::default_fit_window(hist->hist);
    *k_min = lo;
    *k_max = hi;
    return BN_OK;
}

bn_status bn_fit_power_law(const bn_histogram* hist, uint64_t k_min, uint64_t k_max,
                           bn_power_law_fit* out) {
    if (bn_status st = require(hist && out, "hist and out must not be null")) return st;
    return guarded([&] {
        const analysis::PowerLawFit fit = analysis::fit_power_law(hist->hist, k_min, k_max);
        out->gamma = fit.gamma;
        out->intercept = fit.intercept;
        out->r_squared = fit.r_squared;
        out->k_min = fit.k_min;
        out->k_max = fit.k_max;
        return BN_OK;
    });
}

void bn_histogram_free(bn_histogram* hist) { delete hist; }

bn_status bn_mean_distance(const bn_network* net, uint64_t sample_pairs, uint64_t seed,
                           double* out) {
    if (bn_status st = require(net && out, "net and out must not be null")) return st;
    return guarded([&] {
        Rng rng(seed);
        *out = analysis::mean_distance(net->net, sample_pairs, rng);
        return BN_OK;
    });
}

bn_status bn_component_sizes(const bn_network* net, uint64_t* sizes, size_t capacity,
                             size_t* count) {
    if (bn_status st = require(net && count, "net and count must not be null")) return st;
    return guarded([&] {
        const std::vector<std::size_t> comp = analysis::component_sizes(net->net);
        *count = comp.size();
        if (sizes) {
            const std::size_t n = std::min(capacity, comp.size());
            for (std::size_t i = 0; i < n; ++i) sizes[i] = comp[i];
        }
        return BN_OK;
    });
}

/* --- experiments --------------------------------------------------------- */

bn_status bn_experiment_run(const char* figure_id, const char* scale, uint32_t runs_override,
                            uint64_t seed, int seed_is_set, uint32_t jobs,
                            const char* out_dir) {
    if (bn_status st = require(figure_id && scale && out_dir,
                               "figure_id, scale and out_dir must not be null"))
        return st;
    const auto fig = experiments::parse_figure_id(figure_id);
    if (!fig) {
        std::string valid;
        for (const auto& name : experiments::figure_id_names()) {
            if (!valid.empty()) valid += ", ";
            valid += name;
        }
        set_error("unknown figure id '" + std::string(figure_id) + "' (valid: " + valid + ")");
        return BN_ERR_INVALID_ARGUMENT;
    }
    const auto sc = experiments::parse_scale(scale);
    if (!sc) {
        set_error("unknown scale '" + std::string(scale) + "' (valid: desk, full)");
        return BN_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        experiments::ExperimentSpec spec = experiments::preset(*fig, *sc);
        if (runs_override > 0) spec.runs = runs_override;
        if (seed_is_set) spec.master_seed = seed;
        const experiments::FigureData data = experiments::run_experiment(spec, jobs);
        experiments::write_outputs(data, out_dir);
        return BN_OK;
    });
}

}  // extern "C"
