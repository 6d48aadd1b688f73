#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "analysis/analysis.hpp"
#include "engine/engine.hpp"
#include "json.hpp"

namespace beliefnet::experiments {

enum class FigureId {
    ScaleFreeBaseline,  // "1a": plain preferential growth
    ScaleFreeType1,     // "1b-type1"
    ScaleFreeType2,     // "1b-type2"
    Diameter,           // "2"
    StarByFitness,      // "3"
    DegreeByOrdinal,    // "4"
    StarByTime,         // "5"
    AttackerVsSize,     // "6"
    LearningCurve,      // "7"
};

enum class Scale { Full, Desk };

const std::vector<std::string>& figure_id_names();
std::optional<FigureId> parse_figure_id(const std::string& name);
std::string figure_id_name(FigureId id);
std::optional<Scale> parse_scale(const std::string& name);

// Canonical per-mode configs (n_points left to the caller's size).
SimConfig baseline_config(std::uint64_t n_points);       // U=2, E=1, no forgetting, all positive
SimConfig type1_config(std::uint64_t n_points);          // H=.5 U=2 E=10 F=1, f=1, a=b=c=1
SimConfig type2_config(std::uint64_t n_points);          // as type 1 with random f and counts
SimConfig star_fitness_config(std::uint64_t n_points, std::uint64_t special_ordinal);
SimConfig star_time_config(std::uint64_t n_points);      // last input gets E=1000
SimConfig learning_base_config();                        // 1000-point all-positive base
SimConfig learning_added_config(std::uint64_t added_points);  // E = 1000/added, F=10

struct ExperimentSpec {
    FigureId figure;
    Scale scale;
    std::uint32_t runs = 1;
    SimConfig base;
    std::vector<std::uint64_t> sizes;             // diameter / attacker sweeps
    std::vector<std::uint64_t> added_counts;      // learning sweep
    std::vector<std::uint64_t> special_ordinals;  // star-by-fitness variants
    std::uint64_t master_seed = 0;
};

ExperimentSpec preset(FigureId figure, Scale scale);

struct FigureData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::json fit;   // null unless the figure carries a power-law fit
    nlohmann::json meta;  // resolved configuration, seeds, timings, extras
};

// Executes the spec; runs use seeds master_seed, master_seed+1, ... assigned
// per (variant, run) in declared order, so results are reproducible and
// independent of the number of worker threads.
FigureData run_experiment(const ExperimentSpec& spec, std::uint32_t jobs = 0);

// Writes data.csv, meta.json and (when present) fit.json under dir.
void write_outputs(const FigureData& data, const std::string& dir);

// Averaged degree histogram over `runs` independent simulations of `base`
// with seeds master_seed + run index. Exposed for the verification suite.
analysis::DegreeHistogram ensemble_histogram(const SimConfig& base, std::uint32_t runs,
                                             std::uint64_t master_seed, std::uint32_t jobs = 0);

// Star-figure bookkeeping: final degree of the designated special vertex per
// run, plus the largest degree reached by any other vertex in any run.
struct SpecialDegreeStats {
    std::uint32_t runs = 0;
    std::uint32_t survived = 0;
    double mean_degree = 0.0;  // over surviving runs
    std::uint64_t min_degree = 0;
    std::uint64_t max_degree = 0;
    std::uint64_t bulk_max_degree = 0;  // max degree among non-special vertices
};

// Averaged histogram over `runs` simulations of `base` with the designated
// special vertex tracked separately.
struct StarEnsembleResult {
    analysis::DegreeHistogram hist;
    SpecialDegreeStats special;
};
StarEnsembleResult star_ensemble(const SimConfig& base, std::uint32_t runs,
                                 std::uint64_t master_seed, VertexId special_id,
                                 std::uint32_t jobs = 0);

// Learning-figure building block: the 1000-point base network with exactly
// 1000 edges (tree growth plus one extra random positive edge), drawn from
// the caller's RNG so the adding phase can continue the same stream.
SignedNetwork build_learning_base(Rng& rng);

std::uint32_t default_jobs();

}  // namespace beliefnet::experiments
