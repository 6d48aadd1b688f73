#pragma once

#include <cstdint>
#include <vector>

#include "core/network.hpp"
#include "core/rng.hpp"
#include "engine/config.hpp"

namespace beliefnet::engine {

// Time steps left in the current cycle. Killing tests and structuring walks
// charge exactly one step each; everything else is free.
struct TimeBudget {
    std::uint64_t remaining = 0;
    std::uint64_t used = 0;

    bool charge() {
        if (remaining == 0) return false;
        --remaining;
        ++used;
        return true;
    }
};

enum class StepOutcome {
    Linked,           // walk completed, edge present, both checks passed
    NoOp,             // dead-end walk or edge already present; step still charged
    InputRestart,     // input failed its check; edges cleared, first linking again
    InputRemoved,     // input ejected by the consistency cascade
    OthersEjected,    // walk partner removed (and cascade run); input survives
    BudgetExhausted,  // ran out of time mid-step; network left as-is
};

struct CycleReport {
    std::uint64_t cycle = 0;  // ordinal of the processed input
    bool attached = false;    // input still present at cycle end
    std::uint64_t time_used = 0;
    std::uint64_t removed_count = 0;  // vertices removed during the cycle, any cause
    std::uint64_t n_vertices = 0;     // post-cycle
    std::uint64_t n_edges = 0;        // post-cycle
};

// Hooks for tracing. Callbacks run synchronously on the simulation thread.
class Observer {
public:
    virtual ~Observer() = default;
    // Fired when a self-consistency test terminates; emptied tells whether the
    // blacklist drained or the budget ran out first.
    virtual void on_consistency_test_end(const SignedNetwork&, bool /*emptied*/) {}
    virtual void on_cycle_end(const SignedNetwork&, const CycleReport&) {}
};

// Creates the cycle's input vertex (degree 0, pending first linking) with
// attributes drawn from the config sources, overrides applied. Draw order:
// fitness, then sign counts a, b, c; overridden fields consume no draws.
VertexId make_input(SignedNetwork& net, const SimConfig& cfg, std::uint64_t ordinal, Rng& rng);

// Builds up to U preferential edges for `input`, then charges one killing
// test; on failure clears the edges and retries until the test passes or the
// budget runs out, in which case the input is deleted. Returns whether the
// input attached.
bool first_linking(SignedNetwork& net, VertexId input, const SimConfig& cfg, TimeBudget& budget,
                   Rng& rng);

// One two-step fitness-weighted random walk from the attached input, linking
// it to the walk's endpoint (one time step), followed by checking. Requires
// degree(input) >= 1.
StepOutcome structuring_step(SignedNetwork& net, VertexId input, TimeBudget& budget, Rng& rng,
                             Observer* obs = nullptr);

// The two killing tests after a structuring walk and the four-way case split.
StepOutcome checking(SignedNetwork& net, VertexId input, VertexId n2, TimeBudget& budget,
                     Rng& rng, Observer* obs = nullptr);

struct CascadeResult {
    std::vector<VertexId> removed;
    bool blacklist_emptied = false;
};

// Blacklist-driven ejection cascade. Pops the front, charges one killing test
// on it; a failing vertex is removed and its positive neighbors are appended
// ranked by fitness (descending, ties by ascending id, never listed twice at
// once). Runs until the blacklist drains or time runs out. Entries that
// vanished through earlier cascades are skipped without charge.
CascadeResult self_consistency_test(SignedNetwork& net, VertexId start, TimeBudget& budget,
                                    Rng& rng, Observer* obs = nullptr);
CascadeResult consistency_cascade(SignedNetwork& net, std::vector<VertexId> seeds,
                                  TimeBudget& budget, Rng& rng, Observer* obs = nullptr);

// One full cycle: input creation, first linking, structuring until the time
// budget is spent or the input is gone, then forgetting. `ordinal` must be
// net.next_ordinal().
CycleReport run_cycle(SignedNetwork& net, const SimConfig& cfg, std::uint64_t ordinal, Rng& rng,
                      Observer* obs = nullptr);

// Runs n_cycles further inputs on an existing network with an external RNG.
// The config's tolerance must match the network's.
std::vector<CycleReport> continue_simulation(SignedNetwork& net, const SimConfig& cfg,
                                             std::uint64_t n_cycles, Rng& rng,
                                             Observer* obs = nullptr);

struct SimResult {
    SignedNetwork net;
    std::vector<CycleReport> trace;
};

// Fresh network, cfg.n_points cycles, RNG seeded from cfg.seed. Identical
// config and seed give a bit-identical trajectory.
SimResult run_simulation(const SimConfig& cfg, Observer* obs = nullptr);

}  // namespace beliefnet::engine
