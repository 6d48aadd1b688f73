// Micro-scale cross-checks of the probabilistic primitives against a
// brute-force enumerator that works straight off an adjacency matrix,
// independent of the simulator's own code paths.
#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "core/network.hpp"
#include "engine/engine.hpp"

using namespace beliefnet;

namespace {

constexpr std::size_t kMaxN = 6;

struct TinyGraph {
    std::size_t n = 0;
    double fitness[kMaxN] = {};
    int sign[kMaxN][kMaxN] = {};  // 0 = no edge, else -1 / +2 ... use 9 for none
    bool edge[kMaxN][kMaxN] = {};

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t u = 0; u < n; ++u) d += edge[v][u] ? 1 : 0;
        return d;
    }
    std::size_t negatives(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t u = 0; u < n; ++u) d += (edge[v][u] && sign[v][u] < 0) ? 1 : 0;
        return d;
    }
};

TinyGraph random_tiny(Rng& rng, bool with_edges = true, bool zero_fitness = false) {
    TinyGraph g;
    g.n = 2 + rng.uniform_below(kMaxN - 1);
    for (std::size_t v = 0; v < g.n; ++v)
        g.fitness[v] = zero_fitness ? 0.0
                       : rng.uniform_below(5) == 0 ? 0.0
                                                   : rng.uniform01();
    if (with_edges) {
        for (std::size_t u = 0; u < g.n; ++u)
            for (std::size_t v = u + 1; v < g.n; ++v)
                if (rng.uniform01() < 0.45) {
                    const int s = int(rng.uniform_below(3)) - 1;
                    g.edge[u][v] = g.edge[v][u] = true;
                    g.sign[u][v] = g.sign[v][u] = s;
                }
    }
    return g;
}

SignedNetwork materialize(const TinyGraph& g, double tolerance) {
    SignedNetwork net(tolerance);
    for (std::size_t v = 0; v < g.n; ++v)
        net.add_vertex(v, VertexAttrs{g.fitness[v], 1.0, 0.0, v});
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (g.edge[u][v]) net.add_edge(u, v, sign_from_int(g.sign[u][v]));
    return net;
}

// Brute-force attachment distribution per the preferential rule.
std::map<VertexId, double> enumerate_attachment(const TinyGraph& g, std::size_t i) {
    std::map<VertexId, double> out;
    double total_fk = 0.0, total_f = 0.0;
    std::size_t count = 0;
    for (std::size_t t = 0; t < g.n; ++t) {
        if (t == i || g.edge[i][t]) continue;
        total_fk += g.fitness[t] * double(g.degree(t));
        total_f += g.fitness[t];
        ++count;
    }
    for (std::size_t t = 0; t < g.n; ++t) {
        if (t == i || g.edge[i][t]) continue;
        if (total_fk > 0.0)
            out[t] = g.fitness[t] * double(g.degree(t)) / total_fk;
        else if (total_f > 0.0)
            out[t] = g.fitness[t] / total_f;
        else
            out[t] = 1.0 / double(count);
    }
    return out;
}

// Brute-force two-step walk outcome distribution from i: probability that the
// walk ends on each n2 (the input's own slot holds the dead-end probability).
std::map<VertexId, double> enumerate_walk(const TinyGraph& g, std::size_t i) {
    std::map<VertexId, double> out;
    double f_sum = 0.0;
    for (std::size_t n1 = 0; n1 < g.n; ++n1)
        if (g.edge[i][n1]) f_sum += g.fitness[n1];
    std::size_t n_nbrs = 0;
    for (std::size_t n1 = 0; n1 < g.n; ++n1) n_nbrs += g.edge[i][n1] ? 1 : 0;

    for (std::size_t n1 = 0; n1 < g.n; ++n1) {
        if (!g.edge[i][n1]) continue;
        const double p1 = f_sum > 0.0 ? g.fitness[n1] / f_sum : 1.0 / double(n_nbrs);
        double f2_sum = 0.0;
        std::size_t n2_count = 0;
        for (std::size_t n2 = 0; n2 < g.n; ++n2) {
            if (!g.edge[n1][n2] || n2 == i) continue;
            f2_sum += g.fitness[n2];
            ++n2_count;
        }
        if (n2_count == 0) {
            out[i] += p1;  // dead end
            continue;
        }
        for (std::size_t n2 = 0; n2 < g.n; ++n2) {
            if (!g.edge[n1][n2] || n2 == i) continue;
            const double p2 =
                f2_sum > 0.0 ? g.fitness[n2] / f2_sum : 1.0 / double(n2_count);
            out[n2] += p1 * p2;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("attachment probabilities match brute-force enumeration exactly") {
    Rng rng(9001);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const TinyGraph g = random_tiny(rng, trial % 3 != 0, trial % 7 == 0);
        const SignedNetwork net = materialize(g, 0.5);
        for (std::size_t i = 0; i < g.n; ++i) {
            const auto expected = enumerate_attachment(g, i);
            const auto got = attachment_weights(net, i);
            REQUIRE(got.size() == expected.size());
            for (const auto& w : got) {
                REQUIRE(expected.count(w.id) == 1);
                CHECK(std::abs(w.prob - expected.at(w.id)) <= 1e-12);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("killing verdicts match a recount over a tolerance grid") {
    Rng rng(9002);
    for (int trial = 0; trial < 200; ++trial) {
        const TinyGraph g = random_tiny(rng);
        for (const double h : {0.0, 0.1, 0.25, 1.0 / 3, 0.5, 0.75, 1.0}) {
            const SignedNetwork net = materialize(g, h);
            for (std::size_t v = 0; v < g.n; ++v) {
                const std::size_t deg = g.degree(v);
                const bool expected =
                    deg > 0 && double(g.negatives(v)) > h * double(deg);
                CHECK(net.killing(v) == expected);
            }
        }
    }
}

TEST_CASE("first-linking target frequencies follow the enumerated weights") {
    // one fixed five-vertex graph, 10^5 single-target draws
    Rng setup(9003);
    TinyGraph g;
    do {
        g = random_tiny(setup);
    } while (g.n < 5 || enumerate_attachment(g, 0).size() < 3);

    const auto expected = enumerate_attachment(g, 0);
    SimConfig cfg;
    cfg.tolerance = 1.0;
    cfg.edges_per_input = 1;
    cfg.steps_per_cycle = 1;
    cfg.n_points = 1;
    cfg.fitness = FitnessSource{false, 1.0};
    cfg.sign_counts = SignCountsSource{false, SignCounts{1, 0, 0}};

    const int draws = 100000;
    std::map<VertexId, int> counts;
    Rng rng(9004);
    for (int d = 0; d < draws; ++d) {
        SignedNetwork net = materialize(g, 1.0);
        engine::TimeBudget budget{1, 0};
        engine::first_linking(net, 0, cfg, budget, rng);
        for (const auto& [nb, sign] : net.neighbors(0)) ++counts[nb];
    }
    for (const auto& [id, p] : expected) {
        const double freq = counts[id] / double(draws);
        const double sigma = std::sqrt(p * (1 - p) / draws);
        CHECK(std::abs(freq - p) <= 3 * sigma + 1e-9);
    }
}

TEST_CASE("structuring walk endpoints follow the enumerated distribution") {
    // fixture: input 0 with two neighbors of unequal fitness, branching hops
    TinyGraph g;
    g.n = 6;
    const double fs[] = {1.0, 0.2, 0.8, 0.5, 0.7, 0.3};
    for (std::size_t v = 0; v < g.n; ++v) g.fitness[v] = fs[v];
    auto link = [&](std::size_t u, std::size_t v) {
        g.edge[u][v] = g.edge[v][u] = true;
        g.sign[u][v] = g.sign[v][u] = 1;
    };
    link(0, 1);
    link(0, 2);
    link(1, 3);
    link(1, 4);
    link(2, 4);
    link(2, 5);
    link(3, 4);

    const auto expected = enumerate_walk(g, 0);
    const int draws = 100000;
    std::map<VertexId, int> counts;
    Rng rng(9005);
    for (int d = 0; d < draws; ++d) {
        SignedNetwork net = materialize(g, 1.0);
        engine::TimeBudget budget{100, 0};
        const auto out = engine::structuring_step(net, 0, budget, rng);
        if (out == engine::StepOutcome::NoOp) {
            ++counts[0];
            continue;
        }
        for (const auto& [nb, sign] : net.neighbors(0))
            if (!g.edge[0][nb] && nb != 0) ++counts[nb];
    }
    double expected_mass = 0.0;
    for (const auto& [id, p] : expected) {
        expected_mass += p;
        const double freq = counts[id] / double(draws);
        const double sigma = std::sqrt(p * (1 - p) / draws) + 1e-9;
        CHECK(std::abs(freq - p) <= 3 * sigma);
    }
    CHECK(expected_mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sign draws follow (g, h) within three sigmas") {
    const VertexAttrs attrs{1.0, 0.55, 0.3, 0};
    Rng rng(9006);
    const int draws = 100000;
    int pos = 0, neg = 0, neu = 0;
    for (int d = 0; d < draws; ++d) {
        switch (draw_sign(attrs, rng)) {
            case EdgeSign::Positive: ++pos; break;
            case EdgeSign::Negative: ++neg; break;
            case EdgeSign::Neutral: ++neu; break;
        }
    }
    auto within = [&](int count, double p) {
        const double sigma = std::sqrt(p * (1 - p) / draws);
        return std::abs(count / double(draws) - p) <= 3 * sigma;
    };
    CHECK(within(pos, 0.55));
    CHECK(within(neg, 0.30));
    CHECK(within(neu, 0.15));
}
