#include "experiments/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace beliefnet::experiments {

using nlohmann::json;

namespace {

const std::vector<std::string> kFigureNames = {
    "1a", "1b-type1", "1b-type2", "2", "3", "4", "5", "6", "7"};

constexpr FigureId kAllFigures[] = {
    FigureId::ScaleFreeBaseline, FigureId::ScaleFreeType1, FigureId::ScaleFreeType2,
    FigureId::Diameter,          FigureId::StarByFitness,  FigureId::DegreeByOrdinal,
    FigureId::StarByTime,        FigureId::AttackerVsSize, FigureId::LearningCurve};

json config_json(const SimConfig& cfg) { return json::parse(config_to_json(cfg)); }

std::string fmt_cell(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Runs fn(run_index) on `jobs` worker threads; any exception is rethrown on
// the calling thread tagged with the failing run.
template <class Fn>
void parallel_runs(std::uint32_t total, std::uint32_t jobs, Fn&& fn) {
    if (jobs == 0) jobs = default_jobs();
    jobs = std::max<std::uint32_t>(1, std::min(jobs, total == 0 ? 1 : total));

    std::atomic<std::uint32_t> next{0};
    std::mutex error_mutex;
    std::string error;

    auto worker = [&]() {
        for (;;) {
            const std::uint32_t i = next.fetch_add(1);
            if (i >= total) return;
            try {
                fn(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error.empty())
                    error = "run " + std::to_string(i) + ": " + e.what();
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::uint32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!error.empty()) throw std::runtime_error(error);
}

}  // namespace

StarEnsembleResult star_ensemble(const SimConfig& base, std::uint32_t runs,
                                 std::uint64_t master_seed, VertexId special_id,
                                 std::uint32_t jobs) {
    std::vector<analysis::DegreeHistogram> hists(runs);
    std::vector<std::int64_t> special_degree(runs, -1);
    std::vector<std::uint64_t> bulk_max(runs, 0);

    parallel_runs(runs, jobs, [&](std::uint32_t i) {
        SimConfig cfg = base;
        cfg.seed = master_seed + i;
        const engine::SimResult result = engine::run_simulation(cfg);
        hists[i] = analysis::degree_distribution(result.net);
        if (result.net.has_vertex(special_id))
            special_degree[i] = static_cast<std::int64_t>(result.net.degree(special_id));
        std::uint64_t bulk = 0;
        result.net.for_each_vertex([&](VertexId id, const VertexAttrs&, std::size_t deg) {
            if (id != special_id) bulk = std::max<std::uint64_t>(bulk, deg);
        });
        bulk_max[i] = bulk;
    });

    StarEnsembleResult out;
    out.hist = analysis::average_histograms(hists);
    auto& stats = out.special;
    stats.runs = runs;
    double sum = 0.0;
    std::uint64_t lo = UINT64_MAX, hi = 0, bulk = 0;
    for (std::uint32_t i = 0; i < runs; ++i) {
        bulk = std::max(bulk, bulk_max[i]);
        if (special_degree[i] < 0) continue;
        ++stats.survived;
        sum += static_cast<double>(special_degree[i]);
        lo = std::min<std::uint64_t>(lo, special_degree[i]);
        hi = std::max<std::uint64_t>(hi, special_degree[i]);
    }
    stats.mean_degree = stats.survived ? sum / stats.survived : 0.0;
    stats.min_degree = stats.survived ? lo : 0;
    stats.max_degree = hi;
    stats.bulk_max_degree = bulk;
    return out;
}

namespace {

json special_stats_json(const SpecialDegreeStats& s) {
    json j;
    j["runs"] = s.runs;
    j["survived"] = s.survived;
    j["mean_degree"] = s.mean_degree;
    j["min_degree"] = s.min_degree;
    j["max_degree"] = s.max_degree;
    j["bulk_max_degree"] = s.bulk_max_degree;
    return j;
}

json peak_json(const analysis::DegreeHistogram& hist) {
    const auto split = analysis::find_peak_split(hist);
    if (!split) return nullptr;
    json j;
    j["bulk_max_k"] = split->bulk_max_k;
    j["peak_min_k"] = split->peak_min_k;
    j["peak_max_k"] = split->peak_max_k;
    j["peak_mass"] = split->peak_mass;
    j["gap_ratio"] = split->gap_ratio;
    return j;
}

void append_histogram_column(std::vector<std::vector<double>>& rows,
                             std::vector<std::uint64_t>& ks,
                             const analysis::DegreeHistogram& hist, std::size_t column,
                             std::size_t n_columns) {
    for (const auto& [k, p] : hist.probs) {
        auto it = std::lower_bound(ks.begin(), ks.end(), k);
        const std::size_t pos = static_cast<std::size_t>(it - ks.begin());
        if (it == ks.end() || *it != k) {
            ks.insert(it, k);
            std::vector<double> row(n_columns + 1, 0.0);
            row[0] = static_cast<double>(k);
            rows.insert(rows.begin() + pos, row);
        }
        rows[pos][column] = p;
    }
}

}  // namespace

std::uint32_t default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

const std::vector<std::string>& figure_id_names() { return kFigureNames; }

std::optional<FigureId> parse_figure_id(const std::string& name) {
    for (std::size_t i = 0; i < kFigureNames.size(); ++i)
        if (kFigureNames[i] == name) return kAllFigures[i];
    return std::nullopt;
}

std::string figure_id_name(FigureId id) {
    for (std::size_t i = 0; i < kFigureNames.size(); ++i)
        if (kAllFigures[i] == id) return kFigureNames[i];
    return "?";
}

std::optional<Scale> parse_scale(const std::string& name) {
    if (name == "full") return Scale::Full;
    if (name == "desk") return Scale::Desk;
    return std::nullopt;
}

SimConfig baseline_config(std::uint64_t n_points) {
    SimConfig cfg;
    cfg.tolerance = 1.0;
    cfg.edges_per_input = 2;
    cfg.steps_per_cycle = 1;
    cfg.forget_per_cycle = 0;
    cfg.n_points = n_points;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{false, SignCounts{1.0, 0.0, 0.0}};
    return cfg;
}

SimConfig type1_config(std::uint64_t n_points) {
    SimConfig cfg;
    cfg.tolerance = 0.5;
    cfg.edges_per_input = 2;
    cfg.steps_per_cycle = 10;
    cfg.forget_per_cycle = 1;
    cfg.n_points = n_points;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{false, SignCounts{1.0, 1.0, 1.0}};
    return cfg;
}

SimConfig type2_config(std::uint64_t n_points) {
    SimConfig cfg = type1_config(n_points);
    cfg.fitness = FitnessSource{true, 1.0};
    cfg.sign_counts = SignCountsSource{true, {}};
    return cfg;
}

SimConfig star_fitness_config(std::uint64_t n_points, std::uint64_t special_ordinal) {
    SimConfig cfg;
    cfg.tolerance = 0.5;
    cfg.edges_per_input = 1;
    cfg.steps_per_cycle = 10;
    cfg.forget_per_cycle = 1;
    cfg.n_points = n_points;
    cfg.fitness = FitnessSource{true, 1.0};
    cfg.sign_counts = SignCountsSource{true, {}};
    PointOverride special;
    special.ordinal = special_ordinal;
    special.fitness = 3.0;
    special.counts = SignCounts{1.0, 1.0, 1.0};
    cfg.overrides.push_back(special);
    return cfg;
}

SimConfig star_time_config(std::uint64_t n_points) {
    SimConfig cfg;
    cfg.tolerance = 0.5;
    cfg.edges_per_input = 1;
    cfg.steps_per_cycle = 10;
    cfg.forget_per_cycle = 1;
    cfg.n_points = n_points;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{true, {}};
    PointOverride special;
    special.ordinal = n_points - 1;
    special.time_steps = 1000;
    cfg.overrides.push_back(special);
    return cfg;
}

SimConfig learning_base_config() {
    SimConfig cfg;
    cfg.tolerance = 0.5;
    cfg.edges_per_input = 1;
    // One step per cycle keeps growth purely preferential: 1000 points come
    // out as a 999-edge tree, matching the stated thousand-point /
    // thousand-link starting network once the extra edge is added.
    cfg.steps_per_cycle = 1;
    cfg.forget_per_cycle = 0;
    cfg.n_points = 1000;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{false, SignCounts{1.0, 0.0, 0.0}};
    return cfg;
}

SimConfig learning_added_config(std::uint64_t added_points) {
    SimConfig cfg;
    cfg.tolerance = 0.5;
    cfg.edges_per_input = 1;
    cfg.steps_per_cycle = std::max<std::uint64_t>(1, 1000 / added_points);
    cfg.forget_per_cycle = 10;
    cfg.n_points = added_points;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{false, SignCounts{1.0, 0.0, 0.0}};
    return cfg;
}

SignedNetwork build_learning_base(Rng& rng) {
    const SimConfig cfg = learning_base_config();
    SignedNetwork net(cfg.tolerance);
    engine::continue_simulation(net, cfg, cfg.n_points, rng);

    // One extra uniform-random positive edge between non-adjacent vertices
    // brings the 999-edge tree to exactly 1000 links.
    const std::vector<VertexId> ids = net.vertex_ids_sorted();
    for (;;) {
        const VertexId u = ids[rng.uniform_below(ids.size())];
        const VertexId v = ids[rng.uniform_below(ids.size())];
        if (u == v || net.has_edge(u, v)) continue;
        net.add_edge(u, v, EdgeSign::Positive);
        break;
    }
    return net;
}

ExperimentSpec preset(FigureId figure, Scale scale) {
    const bool desk = scale == Scale::Desk;
    ExperimentSpec spec;
    spec.figure = figure;
    spec.scale = scale;
    switch (figure) {
        case FigureId::ScaleFreeBaseline:
            spec.runs = desk ? 20 : 200;
            spec.base = baseline_config(10000);
            spec.master_seed = 101;
            break;
        case FigureId::ScaleFreeType1:
            spec.runs = desk ? 20 : 200;
            spec.base = type1_config(10000);
            spec.master_seed = 102;
            break;
        case FigureId::ScaleFreeType2:
            spec.runs = desk ? 20 : 200;
            spec.base = type2_config(10000);
            spec.master_seed = 103;
            break;
        case FigureId::Diameter:
            spec.runs = 10;
            spec.base = type2_config(1000);
            spec.sizes = desk ? std::vector<std::uint64_t>{100, 300, 500, 1000}
                              : std::vector<std::uint64_t>{100, 200, 300, 500, 700, 1000, 1500, 2000};
            spec.master_seed = 104;
            break;
        case FigureId::StarByFitness:
            spec.runs = desk ? 200 : 10000;
            spec.base = star_fitness_config(1000, 0);
            spec.special_ordinals = {0, 31};
            spec.master_seed = 105;
            break;
        case FigureId::DegreeByOrdinal:
            spec.runs = desk ? 50 : 200;
            spec.base = baseline_config(2000);
            spec.master_seed = 106;
            break;
        case FigureId::StarByTime:
            spec.runs = desk ? 200 : 10000;
            spec.base = star_time_config(1000);
            spec.master_seed = 107;
            break;
        case FigureId::AttackerVsSize:
            spec.runs = 50;
            spec.base = type2_config(1000);
            spec.sizes = {100, 300, 1000, 3000};
            spec.master_seed = 108;
            break;
        case FigureId::LearningCurve:
            spec.runs = desk ? 20 : 100;
            spec.base = learning_base_config();
            spec.added_counts = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
            spec.master_seed = 109;
            break;
    }
    return spec;
}

analysis::DegreeHistogram ensemble_histogram(const SimConfig& base, std::uint32_t runs,
                                             std::uint64_t master_seed, std::uint32_t jobs) {
    std::vector<analysis::DegreeHistogram> hists(runs);
    parallel_runs(runs, jobs, [&](std::uint32_t i) {
        SimConfig cfg = base;
        cfg.seed = master_seed + i;
        const engine::SimResult result = engine::run_simulation(cfg);
        hists[i] = analysis::degree_distribution(result.net);
    });
    return analysis::average_histograms(hists);
}

namespace {

FigureData run_scale_free(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    const analysis::DegreeHistogram hist =
        ensemble_histogram(spec.base, spec.runs, spec.master_seed, jobs);
    data.columns = {"k", "p_k"};
    for (const auto& [k, p] : hist.probs)
        data.rows.push_back({static_cast<double>(k), p});
    const auto [k_min, k_max] = analysis::default_fit_window(hist);
    const analysis::PowerLawFit fit = analysis::fit_power_law(hist, k_min, k_max);
    data.fit = {{"gamma", fit.gamma},
                {"intercept", fit.intercept},
                {"r_squared", fit.r_squared},
                {"k_min", fit.k_min},
                {"k_max", fit.k_max}};
    data.meta["config"] = config_json(spec.base);
    return data;
}

FigureData run_diameter(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"n", "baseline_mean_distance", "type2_mean_distance"};

    const std::size_t n_sizes = spec.sizes.size();
    std::vector<double> means(2 * n_sizes, 0.0);
    const std::uint32_t total = static_cast<std::uint32_t>(2 * n_sizes) * spec.runs;
    std::vector<double> samples(total, 0.0);

    parallel_runs(total, jobs, [&](std::uint32_t idx) {
        const std::uint32_t variant = idx / spec.runs;
        const bool type2 = variant >= n_sizes;
        const std::uint64_t n = spec.sizes[variant % n_sizes];
        SimConfig cfg = type2 ? type2_config(n) : baseline_config(n);
        cfg.seed = spec.master_seed + idx;
        const engine::SimResult result = engine::run_simulation(cfg);
        Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        samples[idx] = analysis::mean_distance(result.net, 10000, rng);
    });

    for (std::uint32_t idx = 0; idx < total; ++idx)
        means[idx / spec.runs] += samples[idx] / spec.runs;

    for (std::size_t s = 0; s < n_sizes; ++s)
        data.rows.push_back(
            {static_cast<double>(spec.sizes[s]), means[s], means[n_sizes + s]});

    data.meta["baseline_config"] = config_json(baseline_config(1000));
    data.meta["type2_config"] = config_json(type2_config(1000));
    data.meta["runs_per_size"] = spec.runs;
    return data;
}

FigureData run_star_by_fitness(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"k"};
    std::vector<std::uint64_t> ks;
    data.meta["variants"] = json::array();

    for (std::uint64_t ordinal : spec.special_ordinals)
        data.columns.push_back("p_k_ordinal" + std::to_string(ordinal));

    for (std::size_t v = 0; v < spec.special_ordinals.size(); ++v) {
        const std::uint64_t ordinal = spec.special_ordinals[v];
        const SimConfig cfg = star_fitness_config(spec.base.n_points, ordinal);
        const std::uint64_t seed = spec.master_seed + v * spec.runs;
        const StarEnsembleResult ens = star_ensemble(cfg, spec.runs, seed, ordinal, jobs);
        append_histogram_column(data.rows, ks, ens.hist, 1 + v,
                                spec.special_ordinals.size());
        json variant;
        variant["ordinal"] = ordinal;
        variant["config"] = config_json(cfg);
        variant["special"] = special_stats_json(ens.special);
        variant["peak"] = peak_json(ens.hist);
        data.meta["variants"].push_back(variant);
    }
    return data;
}

FigureData run_degree_by_ordinal(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"ordinal", "baseline_mean_degree", "baseline_survivors",
                    "type2_mean_degree", "type2_survivors"};
    const std::uint64_t n = spec.base.n_points;

    std::map<std::uint64_t, analysis::OrdinalDegree> per_mode[2];
    for (int mode = 0; mode < 2; ++mode) {
        const SimConfig base = mode == 0 ? baseline_config(n) : type2_config(n);
        std::mutex acc_mutex;
        analysis::OrdinalDegreeAccumulator acc;
        parallel_runs(spec.runs, jobs, [&](std::uint32_t i) {
            SimConfig cfg = base;
            cfg.seed = spec.master_seed + static_cast<std::uint64_t>(mode) * spec.runs + i;
            const engine::SimResult result = engine::run_simulation(cfg);
            std::lock_guard<std::mutex> lock(acc_mutex);
            acc.add(result.net);
        });
        per_mode[mode] = acc.finish();
    }

    for (std::uint64_t ordinal = 0; ordinal < n; ++ordinal) {
        std::vector<double> row{static_cast<double>(ordinal), 0.0, 0.0, 0.0, 0.0};
        for (int mode = 0; mode < 2; ++mode) {
            auto it = per_mode[mode].find(ordinal);
            if (it != per_mode[mode].end()) {
                row[1 + 2 * mode] = it->second.mean_degree;
                row[2 + 2 * mode] = it->second.survivors;
            }
        }
        data.rows.push_back(std::move(row));
    }
    data.meta["baseline_config"] = config_json(baseline_config(n));
    data.meta["type2_config"] = config_json(type2_config(n));
    return data;
}

FigureData run_star_by_time(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"k", "p_k"};
    const VertexId special = spec.base.n_points - 1;
    const StarEnsembleResult ens =
        star_ensemble(spec.base, spec.runs, spec.master_seed, special, jobs);
    for (const auto& [k, p] : ens.hist.probs)
        data.rows.push_back({static_cast<double>(k), p});
    data.meta["config"] = config_json(spec.base);
    data.meta["special"] = special_stats_json(ens.special);
    data.meta["peak"] = peak_json(ens.hist);
    return data;
}

FigureData run_attacker(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"n", "attacker_mean_degree", "network_max_mean_degree",
                    "attacker_equals_max_fraction"};

    const std::size_t n_sizes = spec.sizes.size();
    const std::uint32_t total = static_cast<std::uint32_t>(n_sizes) * spec.runs;
    std::vector<double> attacker_deg(total, 0.0);
    std::vector<double> max_deg(total, 0.0);
    std::vector<double> equals(total, 0.0);

    parallel_runs(total, jobs, [&](std::uint32_t idx) {
        const std::size_t size_idx = idx / spec.runs;
        const std::uint64_t n = spec.sizes[size_idx];

        SimConfig base = type2_config(n);
        Rng rng(spec.master_seed + idx);
        SignedNetwork net(base.tolerance);
        engine::continue_simulation(net, base, n, rng);

        SimConfig attacker_cfg = type2_config(1);
        attacker_cfg.steps_per_cycle = 100;
        attacker_cfg.fitness = FitnessSource{false, 1.0};
        const VertexId attacker = net.next_vertex_id();
        engine::continue_simulation(net, attacker_cfg, 1, rng);

        const std::uint64_t a_deg =
            net.has_vertex(attacker) ? net.degree(attacker) : 0;
        std::uint64_t best = 0;
        net.for_each_vertex(
            [&](VertexId, const VertexAttrs&, std::size_t deg) { best = std::max<std::uint64_t>(best, deg); });
        attacker_deg[idx] = static_cast<double>(a_deg);
        max_deg[idx] = static_cast<double>(best);
        equals[idx] = (a_deg > 0 && a_deg == best) ? 1.0 : 0.0;
    });

    for (std::size_t s = 0; s < n_sizes; ++s) {
        double a = 0.0, m = 0.0, eq = 0.0;
        for (std::uint32_t r = 0; r < spec.runs; ++r) {
            const std::size_t idx = s * spec.runs + r;
            a += attacker_deg[idx];
            m += max_deg[idx];
            eq += equals[idx];
        }
        data.rows.push_back({static_cast<double>(spec.sizes[s]), a / spec.runs, m / spec.runs,
                             eq / spec.runs});
    }
    SimConfig attacker_cfg = type2_config(1);
    attacker_cfg.steps_per_cycle = 100;
    attacker_cfg.fitness = FitnessSource{false, 1.0};
    data.meta["base_config"] = config_json(type2_config(1000));
    data.meta["attacker_config"] = config_json(attacker_cfg);
    data.meta["runs_per_size"] = spec.runs;
    return data;
}

FigureData run_learning(const ExperimentSpec& spec, std::uint32_t jobs) {
    FigureData data;
    data.columns = {"added_points", "mean_final_vertices", "stddev_final_vertices"};

    const std::size_t n_counts = spec.added_counts.size();
    const std::uint32_t total = static_cast<std::uint32_t>(n_counts) * spec.runs;
    std::vector<double> finals(total, 0.0);

    parallel_runs(total, jobs, [&](std::uint32_t idx) {
        const std::size_t count_idx = idx / spec.runs;
        const std::uint64_t added = spec.added_counts[count_idx];
        Rng rng(spec.master_seed + idx);
        SignedNetwork net = build_learning_base(rng);
        engine::continue_simulation(net, learning_added_config(added), added, rng);
        finals[idx] = static_cast<double>(net.n_vertices());
    });

    for (std::size_t c = 0; c < n_counts; ++c) {
        double mean = 0.0;
        for (std::uint32_t r = 0; r < spec.runs; ++r) mean += finals[c * spec.runs + r];
        mean /= spec.runs;
        double var = 0.0;
        for (std::uint32_t r = 0; r < spec.runs; ++r) {
            const double d = finals[c * spec.runs + r] - mean;
            var += d * d;
        }
        var /= spec.runs > 1 ? spec.runs - 1 : 1;
        data.rows.push_back(
            {static_cast<double>(spec.added_counts[c]), mean, std::sqrt(var)});
    }
    data.meta["base_config"] = config_json(learning_base_config());
    data.meta["added_config_example"] = config_json(learning_added_config(50));
    data.meta["runs_per_count"] = spec.runs;
    return data;
}

}  // namespace

FigureData run_experiment(const ExperimentSpec& spec, std::uint32_t jobs) {
    const auto start = std::chrono::steady_clock::now();
    FigureData data;
    switch (spec.figure) {
        case FigureId::ScaleFreeBaseline:
        case FigureId::ScaleFreeType1:
        case FigureId::ScaleFreeType2:
            data = run_scale_free(spec, jobs);
            break;
        case FigureId::Diameter:
            data = run_diameter(spec, jobs);
            break;
        case FigureId::StarByFitness:
            data = run_star_by_fitness(spec, jobs);
            break;
        case FigureId::DegreeByOrdinal:
            data = run_degree_by_ordinal(spec, jobs);
            break;
        case FigureId::StarByTime:
            data = run_star_by_time(spec, jobs);
            break;
        case FigureId::AttackerVsSize:
            data = run_attacker(spec, jobs);
            break;
        case FigureId::LearningCurve:
            data = run_learning(spec, jobs);
            break;
    }
    const auto end = std::chrono::steady_clock::now();
    data.meta["figure"] = figure_id_name(spec.figure);
    data.meta["scale"] = spec.scale == Scale::Desk ? "desk" : "full";
    data.meta["runs"] = spec.runs;
    data.meta["master_seed"] = spec.master_seed;
    data.meta["seed_policy"] = "seed(variant, run) = master_seed + variant * runs + run";
    data.meta["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return data;
}

void write_outputs(const FigureData& data, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream csv(dir + "/data.csv");
        if (!csv) throw std::runtime_error("cannot write " + dir + "/data.csv");
        for (std::size_t i = 0; i < data.columns.size(); ++i)
            csv << (i ? "," : "") << data.columns[i];
        csv << "\n";
        for (const auto& row : data.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                csv << (i ? "," : "") << fmt_cell(row[i]);
            csv << "\n";
        }
    }
    {
        std::ofstream meta(dir + "/meta.json");
        if (!meta) throw std::runtime_error("cannot write " + dir + "/meta.json");
        meta << data.meta.dump(2) << "\n";
    }
    if (!data.fit.is_null()) {
        std::ofstream fit(dir + "/fit.json");
        if (!fit) throw std::runtime_error("cannot write " + dir + "/fit.json");
        fit << data.fit.dump(2) << "\n";
    }
}

}  // namespace beliefnet::experiments
