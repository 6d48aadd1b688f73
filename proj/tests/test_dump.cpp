#include "doctest.h"

#include <sstream>

#include "core/dump.hpp"
#include "core/rng.hpp"

using namespace beliefnet;

namespace {

SignedNetwork random_net(std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = 2 + rng.uniform_below(12);
    SignedNetwork net(rng.uniform01());
    for (VertexId v = 0; v < n; ++v) {
        VertexAttrs a;
        a.fitness = rng.uniform01() * 3;
        a.g = rng.uniform01() * 0.5;
        a.h = rng.uniform01() * 0.5;
        a.ordinal = v;
        net.add_vertex(v, a);
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.uniform01() < 0.3)
                net.add_edge(u, v, static_cast<EdgeSign>(int(rng.uniform_below(3)) - 1));
    return net;
}

}  // namespace

TEST_CASE("dump and reload round-trips exactly") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const SignedNetwork net = random_net(seed);
        const std::string text = dump_network(net);
        const SignedNetwork back = load_network_string(text);
        CHECK(dump_network(back) == text);
        CHECK(back.n_vertices() == net.n_vertices());
        CHECK(back.n_edges() == net.n_edges());
        CHECK(back.tolerance() == net.tolerance());
        net.for_each_vertex([&](VertexId id, const VertexAttrs& a, std::size_t deg) {
            REQUIRE(back.has_vertex(id));
            CHECK(back.attrs(id).fitness == a.fitness);
            CHECK(back.attrs(id).g == a.g);
            CHECK(back.attrs(id).h == a.h);
            CHECK(back.attrs(id).ordinal == a.ordinal);
            CHECK(back.degree(id) == deg);
        });
        for (const auto& e : net.edges()) CHECK(back.edge_sign(e.u, e.v) == e.sign);
        back.check_invariants();
    }
}

TEST_CASE("a hand-written dump loads as expected") {
    const std::string text =
        "N 3 H 0.5\n"
        "V 0 1 0.5 0.25 0\n"
        "V 1 1 0.5 0.25 1\n"
        "V 2 1 0.5 0.25 2\n"
        "E 0 1 1\n"
        "E 1 2 -1\n";
    const SignedNetwork net = load_network_string(text);
    CHECK(net.n_vertices() == 3);
    CHECK(net.n_edges() == 2);
    CHECK(net.edge_sign(1, 0) == EdgeSign::Positive);
    CHECK(net.edge_sign(2, 1) == EdgeSign::Negative);
    CHECK(net.negative_degree(1) == 1);
}

TEST_CASE("parse errors carry the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            load_network_string(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };

    // duplicated edge, reversed order
    CHECK(line_of("N 2 H 0.5\nV 0 1 0 0 0\nV 1 1 0 0 1\nE 0 1 1\nE 1 0 1\n") == 5);
    // self-loop
    CHECK(line_of("N 1 H 0.5\nV 0 1 0 0 0\nE 0 0 1\n") == 3);
    // bad sign
    CHECK(line_of("N 2 H 0.5\nV 0 1 0 0 0\nV 1 1 0 0 1\nE 0 1 7\n") == 4);
    // unknown vertex in edge
    CHECK(line_of("N 1 H 0.5\nV 0 1 0 0 0\nE 0 3 1\n") == 3);
    // g + h above one
    CHECK(line_of("N 1 H 0.5\nV 0 1 0.8 0.4 0\n") == 2);
    // header count mismatch
    CHECK(line_of("N 2 H 0.5\nV 0 1 0 0 0\n") == 2);
    // malformed header
    CHECK(line_of("X 2 H 0.5\n") == 1);
    // empty input
    CHECK(line_of("") == 1);
    // bad tolerance
    CHECK(line_of("N 0 H 1.5\n") == 1);
    // unknown tag
    CHECK(line_of("N 1 H 0.5\nV 0 1 0 0 0\nQ 1 2\n") == 3);
    // trailing junk on a vertex line
    CHECK(line_of("N 1 H 0.5\nV 0 1 0 0 0 extra\n") == 2);
}

TEST_CASE("an empty network still round-trips") {
    SignedNetwork net(0.25);
    const std::string text = dump_network(net);
    CHECK(text == "N 0 H 0.25\n");
    const SignedNetwork back = load_network_string(text);
    CHECK(back.n_vertices() == 0);
    CHECK(back.tolerance() == 0.25);
}
