// beliefnet command-line front end. Talks to the simulator exclusively
// through the C API in beliefnet.h; CLI11 and nlohmann/json are used only
// for argument parsing and output formatting.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beliefnet.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct FreeString {
    char* s = nullptr;
    ~FreeString() { bn_string_free(s); }
};

int fail(bn_status status) {
    std::cerr << "error: " << bn_last_error() << "\n";
    switch (status) {
        case BN_ERR_INVALID_ARGUMENT:
        case BN_ERR_CONFIG:
        case BN_ERR_PARSE:
        case BN_ERR_IO:
            return kExitUsage;
        default:
            return kExitRuntime;
    }
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << content;
    return static_cast<bool>(out.flush());
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& sets,
            std::int64_t seed, const std::string& out_dir, bool print_dump) {
    bn_config* cfg = nullptr;
    if (bn_status st = bn_config_load_file(config_path.c_str(), &cfg)) return fail(st);

    for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
            bn_config_free(cfg);
            return kExitUsage;
        }
        if (bn_status st = bn_config_set(cfg, kv.substr(0, eq).c_str(),
                                         kv.substr(eq + 1).c_str())) {
            const int code = fail(st);
            bn_config_free(cfg);
            return code;
        }
    }
    if (seed >= 0) {
        if (bn_status st =
                bn_config_set(cfg, "seed", std::to_string(seed).c_str())) {
            const int code = fail(st);
            bn_config_free(cfg);
            return code;
        }
    }

    FreeString warnings;
    if (bn_config_warnings(cfg, &warnings.s) == BN_OK && warnings.s && *warnings.s)
        std::cerr << warnings.s;

    bn_sim_result* result = nullptr;
    if (bn_status st = bn_simulate(cfg, &result)) {
        const int code = fail(st);
        bn_config_free(cfg);
        return code;
    }

    std::filesystem::create_directories(out_dir);
    const bn_network* net = bn_result_network(result);

    bool ok = true;

    // final network dump
    if (bn_status st = bn_network_save_file(net, (out_dir + "/network.txt").c_str())) {
        fail(st);
        ok = false;
    }

    // cycle trace
    {
        std::string csv = "cycle,attached,time_used,removed_count,n_vertices,n_edges\n";
        for (size_t i = 0; i < bn_result_cycle_count(result); ++i) {
            bn_cycle_report row{};
            bn_result_cycle(result, i, &row);
            csv += std::to_string(row.cycle) + "," + std::to_string(row.attached) + "," +
                   std::to_string(row.time_used) + "," + std::to_string(row.removed_count) +
                   "," + std::to_string(row.n_vertices) + "," + std::to_string(row.n_edges) +
                   "\n";
        }
        ok = write_file(out_dir + "/trace.csv", csv) && ok;
    }

    // degree histogram
    {
        bn_histogram* hist = nullptr;
        if (bn_status st = bn_histogram_compute(net, &hist)) {
            fail(st);
            ok = false;
        } else {
            std::string csv = "k,p_k\n";
            char line[64];
            for (size_t i = 0; i < bn_histogram_size(hist); ++i) {
                uint64_t k = 0;
                double p = 0.0;
                bn_histogram_bin(hist, i, &k, &p);
                std::snprintf(line, sizeof line, "%llu,%.12g\n",
                              static_cast<unsigned long long>(k), p);
                csv += line;
            }
            bn_histogram_free(hist);
            ok = write_file(out_dir + "/histogram.csv", csv) && ok;
        }
    }

    // resolved configuration
    {
        FreeString cfg_json;
        if (bn_config_to_json(cfg, &cfg_json.s) == BN_OK) {
            json meta;
            meta["config"] = json::parse(cfg_json.s);
            meta["n_vertices"] = bn_network_vertex_count(net);
            meta["n_edges"] = bn_network_edge_count(net);
            ok = write_file(out_dir + "/meta.json", meta.dump(2) + "\n") && ok;
        } else {
            ok = false;
        }
    }

    if (print_dump) {
        FreeString dump;
        if (bn_network_dump(net, &dump.s) == BN_OK)
            std::cout << dump.s;
        else
            ok = false;
    }

    bn_result_free(result);
    bn_config_free(cfg);
    return ok ? 0 : kExitRuntime;
}

int cmd_experiment(const std::string& figure, const std::string& scale, std::uint32_t runs,
                   std::int64_t seed, std::uint32_t jobs, const std::string& out_dir) {
    const bn_status st =
        bn_experiment_run(figure.c_str(), scale.c_str(), runs, seed >= 0 ? seed : 0,
                          seed >= 0 ? 1 : 0, jobs, out_dir.c_str());
    if (st) return fail(st);
    std::cout << "wrote " << out_dir << "/data.csv\n";
    return 0;
}

int cmd_analyze(const std::string& dump_path, const std::string& metrics_arg,
                std::uint64_t sample_pairs, std::uint64_t seed) {
    bn_network* net = nullptr;
    if (bn_status st = bn_network_load_file(dump_path.c_str(), &net)) return fail(st);

    std::vector<std::string> metrics;
    for (std::size_t pos = 0; pos < metrics_arg.size();) {
        const auto comma = metrics_arg.find(',', pos);
        const auto end = comma == std::string::npos ? metrics_arg.size() : comma;
        if (end > pos) metrics.push_back(metrics_arg.substr(pos, end - pos));
        pos = end + 1;
    }

    json out;
    out["n_vertices"] = bn_network_vertex_count(net);
    out["n_edges"] = bn_network_edge_count(net);

    int code = 0;
    for (const auto& metric : metrics) {
        if (metric == "histogram" || metric == "fit") {
            bn_histogram* hist = nullptr;
            if (bn_status st = bn_histogram_compute(net, &hist)) {
                code = fail(st);
                break;
            }
            if (metric == "histogram") {
                json bins = json::array();
                for (size_t i = 0; i < bn_histogram_size(hist); ++i) {
                    uint64_t k = 0;
                    double p = 0.0;
                    bn_histogram_bin(hist, i, &k, &p);
                    bins.push_back({{"k", k}, {"p_k", p}});
                }
                out["histogram"] = bins;
            } else {
                uint64_t k_min = 0, k_max = 0;
                bn_histogram_default_window(hist, &k_min, &k_max);
                bn_power_law_fit fit{};
                if (bn_status st = bn_fit_power_law(hist, k_min, k_max, &fit)) {
                    bn_histogram_free(hist);
                    code = fail(st);
                    break;
                }
                out["fit"] = {{"gamma", fit.gamma},
                              {"intercept", fit.intercept},
                              {"r_squared", fit.r_squared},
                              {"k_min", fit.k_min},
                              {"k_max", fit.k_max}};
            }
            bn_histogram_free(hist);
        } else if (metric == "diameter") {
            double d = 0.0;
            if (bn_status st = bn_mean_distance(net, sample_pairs, seed, &d)) {
                code = fail(st);
                break;
            }
            out["diameter"] = d;
        } else if (metric == "components") {
            size_t count = 0;
            if (bn_status st = bn_component_sizes(net, nullptr, 0, &count)) {
                code = fail(st);
                break;
            }
            std::vector<uint64_t> sizes(count);
            bn_component_sizes(net, sizes.data(), sizes.size(), &count);
            out["components"] = sizes;
        } else {
            std::cerr << "error: unknown metric '" << metric
                      << "' (valid: histogram, fit, diameter, components)\n";
            code = kExitUsage;
            break;
        }
    }

    bn_network_free(net);
    if (code) return code;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beliefnet — signed belief-network growth simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one simulation from a config file");
    std::string run_config;
    std::vector<std::string> run_sets;
    std::int64_t run_seed = -1;
    std::string run_out = ".";
    bool run_dump = false;
    run->add_option("--config", run_config, "JSON config file")->required();
    run->add_option("--set", run_sets, "override a config key (key=value, repeatable)");
    run->add_option("--seed", run_seed, "override the seed");
    run->add_option("--out", run_out, "output directory (default: .)");
    run->add_flag("--dump", run_dump, "also print the final network dump to stdout");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a figure preset");
    std::string exp_figure;
    std::string exp_scale = "desk";
    std::uint32_t exp_runs = 0;
    std::int64_t exp_seed = -1;
    std::uint32_t exp_jobs = 0;
    std::string exp_out;
    experiment->add_option("figure", exp_figure, "figure id (1a, 1b-type1, 1b-type2, 2..7)")
        ->required();
    experiment->add_option("--scale", exp_scale, "desk or full (default: desk)");
    experiment->add_option("--runs", exp_runs, "override the preset's run count");
    experiment->add_option("--seed", exp_seed, "override the preset's master seed");
    experiment->add_option("--jobs", exp_jobs, "worker threads (default: all cores)");
    experiment->add_option("--out", exp_out, "output directory (default: figure-<id>)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "compute metrics for a network dump");
    std::string an_dump;
    std::string an_metrics = "histogram,fit,diameter,components";
    std::uint64_t an_pairs = 0;
    std::uint64_t an_seed = 0;
    analyze->add_option("dump", an_dump, "network dump file")->required();
    analyze->add_option("--metrics", an_metrics, "comma-separated metric list");
    analyze->add_option("--sample-pairs", an_pairs,
                        "pair samples for the distance estimate (0 = auto)");
    analyze->add_option("--seed", an_seed, "seed for sampled metrics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_config, run_sets, run_seed, run_out, run_dump);
        if (experiment->parsed()) {
            const std::string out_dir =
                exp_out.empty() ? "figure-" + exp_figure : exp_out;
            return cmd_experiment(exp_figure, exp_scale, exp_runs, exp_seed, exp_jobs, out_dir);
        }
        if (analyze->parsed()) return cmd_analyze(an_dump, an_metrics, an_pairs, an_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
