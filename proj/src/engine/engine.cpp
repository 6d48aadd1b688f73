#include "engine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

namespace beliefnet::engine {

namespace {

// Scratch buffers for the hot attachment/walk sampling paths.
struct Scratch {
    std::vector<VertexId> ids;
    std::vector<double> weights;
};

thread_local Scratch scratch;

// Preferential target pick among vertices not equal to and not adjacent to
// `input`, mirroring attachment_weights() but without materializing
// normalized probabilities. Returns false when no candidate exists.
bool pick_attachment_target(const SignedNetwork& net, VertexId input, Rng& rng, VertexId& out) {
    auto& ids = scratch.ids;
    auto& weights = scratch.weights;
    ids.clear();
    weights.clear();

    // Mark current neighbors for O(1) exclusion during the scan.
    thread_local std::unordered_set<VertexId> excluded;
    excluded.clear();
    for (const auto& [nb, sign] : net.neighbors(input)) excluded.insert(nb);

    double total_fk = 0.0;
    double total_f = 0.0;
    net.for_each_vertex([&](VertexId id, const VertexAttrs& a, std::size_t deg) {
        if (id == input || excluded.count(id)) return;
        ids.push_back(id);
        const double fk = a.fitness * static_cast<double>(deg);
        weights.push_back(fk);
        total_fk += fk;
        total_f += a.fitness;
    });
    if (ids.empty()) return false;

    if (total_fk > 0.0) {
        out = ids[rng.pick_weighted(weights, total_fk)];
        return true;
    }
    if (total_f > 0.0) {
        weights.clear();
        for (VertexId id : ids) weights.push_back(net.attrs(id).fitness);
        out = ids[rng.pick_weighted(weights, total_f)];
        return true;
    }
    out = ids[rng.uniform_below(ids.size())];
    return true;
}

// Fitness-weighted pick among `neighbors`, optionally skipping one vertex.
// Zero total fitness falls back to a uniform choice.
bool pick_walk_target(const SignedNetwork& net,
                      const std::vector<std::pair<VertexId, EdgeSign>>& neighbors,
                      std::optional<VertexId> skip, Rng& rng, VertexId& out) {
    auto& ids = scratch.ids;
    auto& weights = scratch.weights;
    ids.clear();
    weights.clear();
    double total = 0.0;
    for (const auto& [nb, sign] : neighbors) {
        if (skip && *skip == nb) continue;
        ids.push_back(nb);
        const double f = net.attrs(nb).fitness;
        weights.push_back(f);
        total += f;
    }
    if (ids.empty()) return false;
    if (total > 0.0)
        out = ids[rng.pick_weighted(weights, total)];
    else
        out = ids[rng.uniform_below(ids.size())];
    return true;
}

// Positive neighbors of v ranked by fitness (descending), ties by ascending
// id -- the blacklist insertion order.
std::vector<VertexId> ranked_positive_neighbors(const SignedNetwork& net, VertexId v) {
    std::vector<VertexId> out;
    for (const auto& [nb, sign] : net.neighbors(v))
        if (sign == EdgeSign::Positive) out.push_back(nb);
    std::sort(out.begin(), out.end(), [&](VertexId x, VertexId y) {
        const double fx = net.attrs(x).fitness;
        const double fy = net.attrs(y).fitness;
        return fx != fy ? fx > fy : x < y;
    });
    return out;
}

// End-of-cycle forgetting. The per-time-step rate is the integer part of
// F / E; a cycle with E steps therefore forgets (F div E) * E edges, all
// removed here after structuring. Rates below one edge per step never fire:
// F only bites once it reaches the cycle's step count, which is what lets
// young networks survive their bootstrap cycles and what produces the
// learning curve's collapse threshold.
void forget_for_cycle(SignedNetwork& net, const SimConfig& cfg, std::uint64_t steps_this_cycle,
                      Rng& rng) {
    if (cfg.forget_per_cycle == 0 || steps_this_cycle == 0) return;
    const std::uint64_t per_step = cfg.forget_per_cycle / steps_this_cycle;
    if (per_step == 0) return;
    net.forget_edges(per_step * steps_this_cycle, rng);
}

}  // namespace

VertexId make_input(SignedNetwork& net, const SimConfig& cfg, std::uint64_t ordinal, Rng& rng) {
    const PointOverride* ov = cfg.override_for(ordinal);

    VertexAttrs attrs;
    attrs.ordinal = ordinal;

    if (ov && ov->fitness) {
        attrs.fitness = *ov->fitness;
    } else if (cfg.fitness.random) {
        attrs.fitness = rng.uniform01();
    } else {
        attrs.fitness = cfg.fitness.value;
    }

    if (ov && (ov->g || ov->h)) {
        attrs.g = ov->g.value_or(0.0);
        attrs.h = ov->h.value_or(0.0);
    } else if (ov && ov->counts) {
        std::tie(attrs.g, attrs.h) = sign_probs_from_counts(*ov->counts);
    } else if (cfg.sign_counts.random) {
        SignCounts counts;
        counts.a = rng.uniform01();
        counts.b = rng.uniform01();
        counts.c = rng.uniform01();
        std::tie(attrs.g, attrs.h) = sign_probs_from_counts(counts);
    } else {
        std::tie(attrs.g, attrs.h) = sign_probs_from_counts(cfg.sign_counts.value);
    }

    const VertexId id = net.next_vertex_id();
    net.add_vertex(id, attrs);
    return id;
}

bool first_linking(SignedNetwork& net, VertexId input, const SimConfig& cfg, TimeBudget& budget,
                   Rng& rng) {
    const VertexAttrs attrs = net.attrs(input);
    for (;;) {
        if (budget.remaining == 0) {
            // Time ran out without attaching; the input is gone for good.
            net.remove_vertex(input);
            return false;
        }
        // Build up to U edges. Each new edge makes its target a neighbor, so
        // re-evaluating candidates excludes earlier picks automatically.
        for (std::uint32_t k = 0; k < cfg.edges_per_input; ++k) {
            VertexId target;
            if (!pick_attachment_target(net, input, rng, target)) break;
            net.add_edge(input, target, draw_sign(attrs, rng));
        }
        budget.charge();
        if (!net.killing(input)) return true;
        net.detach_vertex(input);
    }
}

StepOutcome checking(SignedNetwork& net, VertexId input, VertexId n2, TimeBudget& budget,
                     Rng& rng, Observer* obs) {
    // The post-walk test pair rides on the walk's time step; only ejection
    // chains charge further, per test, inside the consistency cascade.
    const bool kill_input = net.killing(input);
    const bool kill_n2 = net.killing(n2);

    if (!kill_input && !kill_n2) return StepOutcome::Linked;

    // Both failing: the one with fewer edges goes; a tie ejects the input,
    // which gets the standard fresh start.
    const bool eject_input =
        kill_input && (!kill_n2 || net.degree(input) <= net.degree(n2));
    if (eject_input) {
        net.detach_vertex(input);
        return StepOutcome::InputRestart;
    }

    std::vector<VertexId> seeds = ranked_positive_neighbors(net, n2);
    net.remove_vertex(n2);
    seeds.erase(std::remove_if(seeds.begin(), seeds.end(),
                               [&](VertexId v) { return !net.has_vertex(v); }),
                seeds.end());
    consistency_cascade(net, std::move(seeds), budget, rng, obs);
    return net.has_vertex(input) ? StepOutcome::OthersEjected : StepOutcome::InputRemoved;
}

StepOutcome structuring_step(SignedNetwork& net, VertexId input, TimeBudget& budget, Rng& rng,
                             Observer* obs) {
    if (!budget.charge()) return StepOutcome::BudgetExhausted;

    VertexId n1;
    if (!pick_walk_target(net, net.neighbors(input), std::nullopt, rng, n1))
        return StepOutcome::NoOp;  // no neighbors to walk from
    VertexId n2;
    if (!pick_walk_target(net, net.neighbors(n1), input, rng, n2))
        return StepOutcome::NoOp;  // dead-end walk, step already charged

    if (!net.has_edge(input, n2))
        net.add_edge(input, n2, draw_sign(net.attrs(input), rng));
    // An already-present edge keeps its sign; the checks still run.

    return checking(net, input, n2, budget, rng, obs);
}

CascadeResult consistency_cascade(SignedNetwork& net, std::vector<VertexId> seeds,
                                  TimeBudget& budget, Rng& rng, Observer* obs) {
    (void)rng;  // the cascade itself is deterministic
    CascadeResult result;
    std::deque<VertexId> blacklist(seeds.begin(), seeds.end());
    std::unordered_set<VertexId> listed(seeds.begin(), seeds.end());

    while (!blacklist.empty()) {
        const VertexId v = blacklist.front();
        blacklist.pop_front();
        listed.erase(v);
        if (!net.has_vertex(v)) continue;  // vanished through an earlier cascade
        if (!budget.charge()) {
            // Out of time: unchecked entries stay in the network.
            if (obs) obs->on_consistency_test_end(net, false);
            return result;
        }
        if (!net.killing(v)) continue;
        std::vector<VertexId> positives = ranked_positive_neighbors(net, v);
        std::vector<VertexId> removed = net.remove_vertex(v);
        result.removed.insert(result.removed.end(), removed.begin(), removed.end());
        for (VertexId p : positives) {
            if (!net.has_vertex(p) || listed.count(p)) continue;
            blacklist.push_back(p);
            listed.insert(p);
        }
    }
    result.blacklist_emptied = true;
    if (obs) obs->on_consistency_test_end(net, true);
    return result;
}

CascadeResult self_consistency_test(SignedNetwork& net, VertexId start, TimeBudget& budget,
                                    Rng& rng, Observer* obs) {
    return consistency_cascade(net, {start}, budget, rng, obs);
}

CycleReport run_cycle(SignedNetwork& net, const SimConfig& cfg, std::uint64_t ordinal, Rng& rng,
                      Observer* obs) {
    const PointOverride* ov = cfg.override_for(ordinal);
    const std::uint64_t steps = ov && ov->time_steps ? *ov->time_steps : cfg.steps_per_cycle;
    TimeBudget budget{steps, 0};

    const std::size_t vertices_before = net.n_vertices();
    const VertexId input = make_input(net, cfg, ordinal, rng);

    bool attached = first_linking(net, input, cfg, budget, rng);
    while (attached && budget.remaining > 0 && net.has_vertex(input) &&
           net.degree(input) > 0) {
        const StepOutcome out = structuring_step(net, input, budget, rng, obs);
        if (out == StepOutcome::InputRestart) {
            attached = first_linking(net, input, cfg, budget, rng);
        } else if (out == StepOutcome::InputRemoved || out == StepOutcome::BudgetExhausted) {
            break;
        }
    }

    forget_for_cycle(net, cfg, steps, rng);

    CycleReport report;
    report.cycle = ordinal;
    report.attached = net.has_vertex(input);
    report.time_used = budget.used;
    report.removed_count =
        static_cast<std::uint64_t>(vertices_before + 1 - net.n_vertices());
    report.n_vertices = net.n_vertices();
    report.n_edges = net.n_edges();
    if (obs) obs->on_cycle_end(net, report);
    return report;
}

std::vector<CycleReport> continue_simulation(SignedNetwork& net, const SimConfig& cfg,
                                             std::uint64_t n_cycles, Rng& rng, Observer* obs) {
    if (cfg.tolerance != net.tolerance())
        throw ConfigError("config tolerance does not match the network's");
    std::vector<CycleReport> trace;
    trace.reserve(n_cycles);
    for (std::uint64_t k = 0; k < n_cycles; ++k)
        trace.push_back(run_cycle(net, cfg, net.next_ordinal(), rng, obs));
    return trace;
}

SimResult run_simulation(const SimConfig& cfg, Observer* obs) {
    cfg.validate();
    SimResult result{SignedNetwork(cfg.tolerance), {}};
    Rng rng(cfg.seed);
    result.trace = continue_simulation(result.net, cfg, cfg.n_points, rng, obs);
    return result;
}

}  // namespace beliefnet::engine
