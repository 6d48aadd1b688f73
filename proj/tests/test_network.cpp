#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "core/network.hpp"
#include "core/rng.hpp"

using namespace beliefnet;

namespace {

VertexAttrs plain(std::uint64_t ordinal = 0, double fitness = 1.0, double g = 1.0,
                  double h = 0.0) {
    return VertexAttrs{fitness, g, h, ordinal};
}

// n plain vertices with ids 0..n-1
SignedNetwork make_net(std::size_t n, double tolerance = 0.5) {
    SignedNetwork net(tolerance);
    for (std::size_t i = 0; i < n; ++i) net.add_vertex(i, plain(i));
    return net;
}

double prob_of(const std::vector<AttachmentWeight>& w, VertexId id) {
    for (const auto& x : w)
        if (x.id == id) return x.prob;
    return -1.0;
}

}  // namespace

TEST_CASE("sign probabilities from counts") {
    auto [g, h] = sign_probs_from_counts({1, 1, 1});
    CHECK(g == doctest::Approx(1.0 / 3));
    CHECK(h == doctest::Approx(1.0 / 3));

    std::tie(g, h) = sign_probs_from_counts({1, 0, 0});
    CHECK(g == 1.0);
    CHECK(h == 0.0);

    std::tie(g, h) = sign_probs_from_counts({2, 1, 1});
    CHECK(g == doctest::Approx(0.5));
    CHECK(h == doctest::Approx(0.25));

    CHECK_THROWS_AS(sign_probs_from_counts({0, 0, 0}), ConfigError);
    CHECK_THROWS_AS(sign_probs_from_counts({-1, 1, 1}), ConfigError);
}

TEST_CASE("edge signs are exactly three-valued") {
    CHECK(sign_from_int(-1) == EdgeSign::Negative);
    CHECK(sign_from_int(0) == EdgeSign::Neutral);
    CHECK(sign_from_int(1) == EdgeSign::Positive);
    CHECK_THROWS(sign_from_int(2));
    CHECK_THROWS(sign_from_int(-2));
}

TEST_CASE("add_edge rejects self-loops and duplicates") {
    SignedNetwork net = make_net(3);
    net.add_edge(0, 1, EdgeSign::Positive);
    CHECK_THROWS_AS(net.add_edge(0, 0, EdgeSign::Positive), ContractViolation);
    CHECK_THROWS_AS(net.add_edge(0, 1, EdgeSign::Negative), ContractViolation);
    CHECK_THROWS_AS(net.add_edge(1, 0, EdgeSign::Negative), ContractViolation);
    CHECK(net.n_edges() == 1);
    CHECK(net.edge_sign(1, 0) == EdgeSign::Positive);
    net.check_invariants();
}

TEST_CASE("removing the center of a 3-leaf star removes all four vertices") {
    SignedNetwork net = make_net(4);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(0, 2, EdgeSign::Positive);
    net.add_edge(0, 3, EdgeSign::Positive);
    const auto removed = net.remove_vertex(0);
    CHECK(removed.size() == 4);
    CHECK(net.n_vertices() == 0);
    CHECK(net.n_edges() == 0);
}

TEST_CASE("removing a leaf of a triangle-plus-leaf removes only the leaf") {
    SignedNetwork net = make_net(4);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    net.add_edge(2, 0, EdgeSign::Positive);
    net.add_edge(2, 3, EdgeSign::Neutral);
    const auto removed = net.remove_vertex(3);
    CHECK(removed == std::vector<VertexId>{3});
    CHECK(net.n_vertices() == 3);
    CHECK(net.n_edges() == 3);
    net.check_invariants();
}

TEST_CASE("removing the middle of a path cascades both endpoints") {
    SignedNetwork net = make_net(3);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    const auto removed = net.remove_vertex(1);
    const std::set<VertexId> got(removed.begin(), removed.end());
    CHECK(got == std::set<VertexId>{0, 1, 2});
    CHECK(net.n_vertices() == 0);
}

TEST_CASE("remove_edge cascades endpoints that drop to zero") {
    SignedNetwork net = make_net(3);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    const auto removed = net.remove_edge(0, 1);
    CHECK(removed == std::vector<VertexId>{0});
    CHECK(net.n_vertices() == 2);
    CHECK(net.has_vertex(1));
    CHECK(net.has_vertex(2));
}

TEST_CASE("detach_vertex keeps the survivor but cascades its neighbors") {
    SignedNetwork net = make_net(4);
    net.add_edge(0, 1, EdgeSign::Negative);
    net.add_edge(0, 2, EdgeSign::Positive);
    net.add_edge(2, 3, EdgeSign::Positive);
    const auto removed = net.detach_vertex(0);
    CHECK(removed == std::vector<VertexId>{1});  // vertex 1 had only the edge to 0
    CHECK(net.has_vertex(0));
    CHECK(net.degree(0) == 0);
    CHECK(net.negative_degree(0) == 0);
    CHECK(net.n_edges() == 1);
    net.check_invariants();
}

TEST_CASE("killing follows the negative-ratio rule") {
    // 2 negative of 4 at H = 0.5 sits on the boundary: not killed
    SignedNetwork net = make_net(6, 0.5);
    net.add_edge(0, 1, EdgeSign::Negative);
    net.add_edge(0, 2, EdgeSign::Negative);
    net.add_edge(0, 3, EdgeSign::Positive);
    net.add_edge(0, 4, EdgeSign::Neutral);
    CHECK_FALSE(net.killing(0));
    // 3 of 4 exceeds it
    net.remove_edge(0, 4);
    net.add_edge(0, 5, EdgeSign::Negative);
    CHECK(net.killing(0));
}

TEST_CASE("killing at zero tolerance triggers on any negative link") {
    SignedNetwork net = make_net(4, 0.0);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(0, 2, EdgeSign::Positive);
    net.add_edge(0, 3, EdgeSign::Negative);
    CHECK(net.killing(0));
    SignedNetwork clean = make_net(4, 0.0);
    clean.add_edge(0, 1, EdgeSign::Positive);
    clean.add_edge(0, 2, EdgeSign::Neutral);
    clean.add_edge(0, 3, EdgeSign::Positive);
    CHECK_FALSE(clean.killing(0));
}

TEST_CASE("killing reports false at degree zero") {
    SignedNetwork net(0.0);
    net.add_vertex(0, plain());
    CHECK_FALSE(net.killing(0));
}

TEST_CASE("killing is monotone under edge additions") {
    // adding a negative link never rescues a failing vertex; adding a
    // non-negative link never condemns a passing one
    Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t links = 1 + rng.uniform_below(30);
        const std::uint64_t negs = rng.uniform_below(links + 1);
        const double h = rng.uniform01();
        const double ratio_before = double(negs) / double(links);
        const double grown_neg = double(negs + 1) / double(links + 1);
        const double grown_pos = double(negs) / double(links + 1);
        if (ratio_before > h) CHECK(grown_neg > h);
        if (ratio_before <= h) CHECK(grown_pos <= h);
        // and the ratio strictly decreases when only the denominator grows
        if (negs > 0) CHECK(grown_pos < ratio_before);
    }
}

TEST_CASE("attachment weights: fitness balances degree") {
    // (f=0.1, k=5) and (f=0.5, k=1) attract a new vertex equally
    SignedNetwork net(0.5);
    net.add_vertex(0, plain(0, 0.1));
    net.add_vertex(1, plain(1, 0.5));
    for (VertexId v = 2; v <= 6; ++v) {
        net.add_vertex(v, plain(v, 0.0));
        net.add_edge(0, v, EdgeSign::Positive);
    }
    net.add_edge(1, 6, EdgeSign::Positive);
    net.add_vertex(100, plain(100));
    const auto w = attachment_weights(net, 100);
    CHECK(prob_of(w, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prob_of(w, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("attachment weights: single candidate takes probability one") {
    SignedNetwork net = make_net(2);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_vertex(5, plain(5));
    net.add_edge(5, 0, EdgeSign::Positive);
    const auto w = attachment_weights(net, 5);  // only vertex 1 is not adjacent
    REQUIRE(w.size() == 1);
    CHECK(w[0].id == 1);
    CHECK(w[0].prob == 1.0);
}

TEST_CASE("attachment weights: hand-normalized 1:2:1") {
    SignedNetwork net = make_net(4);
    net.add_edge(1, 0, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    net.add_edge(0, 3, EdgeSign::Positive);  // degrees: 0->2, 1->2, 2->1, 3->1
    net.add_vertex(9, plain(9));
    net.add_edge(9, 0, EdgeSign::Positive);  // excluded as a neighbor
    const auto w = attachment_weights(net, 9);
    REQUIRE(w.size() == 3);
    CHECK(prob_of(w, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prob_of(w, 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(prob_of(w, 3) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("attachment weights: empty candidate set and fallbacks") {
    SignedNetwork lone(0.5);
    lone.add_vertex(0, plain());
    CHECK(attachment_weights(lone, 0).empty());

    // no edges at all: weights fall back to fitness
    SignedNetwork net(0.5);
    net.add_vertex(0, plain(0, 0.2));
    net.add_vertex(1, plain(1, 0.6));
    net.add_vertex(2, plain(2, 0.2));
    const auto w = attachment_weights(net, 0);
    CHECK(prob_of(w, 1) == doctest::Approx(0.75));
    CHECK(prob_of(w, 2) == doctest::Approx(0.25));

    // all-zero fitness: uniform
    SignedNetwork zero(0.5);
    for (VertexId v = 0; v < 4; ++v) zero.add_vertex(v, plain(v, 0.0));
    zero.add_edge(1, 2, EdgeSign::Positive);
    const auto u = attachment_weights(zero, 0);
    REQUIRE(u.size() == 3);
    for (const auto& x : u) CHECK(x.prob == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("attachment weights always sum to one over non-empty candidates") {
    Rng rng(515);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.uniform_below(8);
        SignedNetwork net(0.5);
        for (VertexId v = 0; v < n; ++v)
            net.add_vertex(v, plain(v, rng.uniform_below(4) == 0 ? 0.0 : rng.uniform01()));
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (rng.uniform01() < 0.4) net.add_edge(u, v, EdgeSign::Positive);
        const VertexId i = rng.uniform_below(n);
        const auto w = attachment_weights(net, i);
        if (w.empty()) continue;
        double total = 0.0;
        for (const auto& x : w) total += x.prob;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("draw_sign extremes and law of large numbers") {
    Rng rng(77);
    const VertexAttrs always_pos{1.0, 1.0, 0.0, 0};
    const VertexAttrs always_neg{1.0, 0.0, 1.0, 0};
    for (int i = 0; i < 200; ++i) {
        CHECK(draw_sign(always_pos, rng) == EdgeSign::Positive);
        CHECK(draw_sign(always_neg, rng) == EdgeSign::Negative);
    }
    const VertexAttrs third{1.0, 1.0 / 3, 1.0 / 3, 0};
    int counts[3] = {0, 0, 0};
    const int n = 30000;
    for (int i = 0; i < n; ++i) ++counts[sign_value(draw_sign(third, rng)) + 1];
    for (int c : counts) CHECK(std::abs(c / double(n) - 1.0 / 3) < 0.02);
}

TEST_CASE("forget_edges removes exactly min(count, edges)") {
    SignedNetwork net = make_net(5);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    net.add_edge(2, 3, EdgeSign::Positive);
    net.add_edge(3, 4, EdgeSign::Positive);
    Rng rng(5);
    CHECK(net.forget_edges(0, rng) == 0);
    CHECK(net.n_edges() == 4);
    CHECK(net.forget_edges(2, rng) == 2);
    CHECK(net.n_edges() == 2);
    net.check_invariants();
}

TEST_CASE("forgetting everything empties the network") {
    SignedNetwork net = make_net(4);
    net.add_edge(0, 1, EdgeSign::Positive);
    net.add_edge(1, 2, EdgeSign::Positive);
    net.add_edge(2, 3, EdgeSign::Negative);
    Rng rng(11);
    CHECK(net.forget_edges(100, rng) == 3);
    CHECK(net.n_vertices() == 0);
    CHECK(net.n_edges() == 0);
}

TEST_CASE("forgetting one edge of a two-edge path hits both edges evenly") {
    int first_gone = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
        SignedNetwork net = make_net(3);
        net.add_edge(0, 1, EdgeSign::Positive);
        net.add_edge(1, 2, EdgeSign::Positive);
        Rng rng(1000 + t);
        CHECK(net.forget_edges(1, rng) == 1);
        // either way, the isolated endpoint vanished with its edge
        CHECK(net.n_vertices() == 2);
        CHECK(net.n_edges() == 1);
        if (!net.has_vertex(0)) ++first_gone;
    }
    // binomial(4000, 0.5): three sigma is about 95
    CHECK(std::abs(first_gone - trials / 2) < 110);
}

TEST_CASE("random operation sequences keep the structure sound") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        SignedNetwork net(rng.uniform01());
        std::set<VertexId> ever_linked;
        VertexId next_id = 0;
        for (int step = 0; step < 200; ++step) {
            const double action = rng.uniform01();
            const auto ids = net.vertex_ids();
            if (action < 0.35 || ids.size() < 2) {
                net.add_vertex(next_id, plain(next_id, rng.uniform01()));
                if (!ids.empty()) {
                    const VertexId other = ids[rng.uniform_below(ids.size())];
                    const auto sign = static_cast<EdgeSign>(int(rng.uniform_below(3)) - 1);
                    net.add_edge(next_id, other, sign);
                    ever_linked.insert(next_id);
                    ever_linked.insert(other);
                }
                ++next_id;
            } else if (action < 0.6) {
                const VertexId u = ids[rng.uniform_below(ids.size())];
                const VertexId v = ids[rng.uniform_below(ids.size())];
                if (u != v && !net.has_edge(u, v)) {
                    const auto sign = static_cast<EdgeSign>(int(rng.uniform_below(3)) - 1);
                    net.add_edge(u, v, sign);
                    ever_linked.insert(u);
                    ever_linked.insert(v);
                }
            } else if (action < 0.75 && net.n_edges() > 0) {
                const auto& e = net.edges()[rng.uniform_below(net.n_edges())];
                net.remove_edge(e.u, e.v);
            } else if (action < 0.85 && !ids.empty()) {
                net.remove_vertex(ids[rng.uniform_below(ids.size())]);
            } else {
                net.forget_edges(rng.uniform_below(3), rng);
            }
            net.check_invariants();
            // nothing that ever carried an edge may sit at degree zero
            net.for_each_vertex([&](VertexId id, const VertexAttrs&, std::size_t deg) {
                if (deg == 0) CHECK(ever_linked.count(id) == 0);
            });
        }
    }
}
