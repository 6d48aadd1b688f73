#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace beliefnet {

// Per-vertex attribute source: a constant or a fresh uniform [0,1) draw.
struct FitnessSource {
    bool random = false;
    double value = 1.0;
};

// Constant (a, b, c) or one uniform [0,1) draw per component.
struct SignCountsSource {
    bool random = false;
    SignCounts value;
};

// Special-point override keyed by insertion ordinal. Fields left empty fall
// through to the run-wide sources. Sign counts and explicit (g, h) are
// mutually exclusive.
struct PointOverride {
    std::uint64_t ordinal = 0;
    std::optional<double> fitness;
    std::optional<SignCounts> counts;
    std::optional<double> g;
    std::optional<double> h;
    std::optional<std::uint64_t> time_steps;  // per-cycle E for this input
};

struct SimConfig {
    double tolerance = 0.5;            // h: global negativity tolerance
    std::uint32_t edges_per_input = 1; // u: edges carried by an input
    std::uint64_t steps_per_cycle = 1; // e: time steps per cycle
    // f_forget: forgetting budget per cycle. Each time step forgets the
    // integer part of f_forget / e edges, so budgets below the step count
    // leave the network alone while larger ones bite hard.
    std::uint64_t forget_per_cycle = 0;
    std::uint64_t n_points = 1;        // inputs to process
    FitnessSource fitness;
    SignCountsSource sign_counts;
    std::vector<PointOverride> overrides;
    std::uint64_t seed = 0;

    // Throws ConfigError on out-of-domain fields.
    void validate() const;

    // Non-fatal oddities worth surfacing (e.g. fitness above 1).
    std::vector<std::string> warnings() const;

    const PointOverride* override_for(std::uint64_t ordinal) const;
};

// JSON document with keys mirroring the field names exactly:
//   h, u, e, f_forget, n_points, fitness, sign_counts, overrides, seed
// "fitness" is a number or "rnd"; "sign_counts" is [a, b, c] or "rnd";
// "overrides" is a list of {ordinal, f?, a?, b?, c?, g?, h?, e?}.
// Unknown keys are errors.
SimConfig parse_config_json(const std::string& text);
SimConfig load_config_file(const std::string& path);
std::string config_to_json(const SimConfig& cfg);

// Applies one "key=value" style override (CLI --set). Unknown keys and
// malformed values raise ConfigError.
void apply_config_override(SimConfig& cfg, const std::string& key, const std::string& value);

}  // namespace beliefnet
