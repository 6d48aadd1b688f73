#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core/rng.hpp"
#include "core/types.hpp"

namespace beliefnet {

// Undirected simple graph with signed edges and per-vertex attributes.
//
// Vertices that lose their last link vanish: every mutating operation applies
// that rule to the vertices it touched (the "cascade"), so outside of
// detach_vertex's survivor and freshly inserted vertices the structure never
// holds an isolated vertex. A vertex inserted with no edges is legitimate --
// it has not *lost* anything -- and stays until linked or explicitly removed.
//
// One logical thread mutates a network at a time; read-only analysis may run
// concurrently on a copy.
class SignedNetwork {
public:
    explicit SignedNetwork(double tolerance);

    double tolerance() const { return tolerance_; }

    // --- vertices ---------------------------------------------------------
    void add_vertex(VertexId id, const VertexAttrs& attrs);
    bool has_vertex(VertexId id) const { return index_.count(id) != 0; }
    const VertexAttrs& attrs(VertexId id) const;
    std::size_t n_vertices() const { return verts_.size(); }

    std::size_t degree(VertexId id) const;
    std::size_t negative_degree(VertexId id) const;

    // Removes v, its incident edges, and every neighbor that drops to degree
    // zero. Returns all removed ids (v first).
    std::vector<VertexId> remove_vertex(VertexId v);

    // Clears v's incident edges but keeps v itself in place (used when a
    // vertex is about to be relinked). Neighbors dropping to degree zero
    // vanish; their ids are returned.
    std::vector<VertexId> detach_vertex(VertexId v);

    // --- edges ------------------------------------------------------------
    std::size_t n_edges() const { return edges_.size(); }
    bool has_edge(VertexId u, VertexId v) const;
    std::optional<EdgeSign> edge_sign(VertexId u, VertexId v) const;
    void add_edge(VertexId u, VertexId v, EdgeSign sign);

    // Removes edge (u, v) and cascades on both endpoints.
    std::vector<VertexId> remove_edge(VertexId u, VertexId v);

    // Deletes `count` (capped at the current edge count) edges chosen
    // uniformly at random without replacement, cascading after each deletion.
    // Returns the number of edges removed.
    std::size_t forget_edges(std::size_t count, Rng& rng);

    // --- iteration --------------------------------------------------------
    const std::vector<std::pair<VertexId, EdgeSign>>& neighbors(VertexId id) const;

    struct Edge {
        VertexId u, v;
        EdgeSign sign;
    };
    const std::vector<Edge>& edges() const { return edges_; }

    // Snapshot of vertex ids in unspecified (storage) order.
    std::vector<VertexId> vertex_ids() const;
    std::vector<VertexId> vertex_ids_sorted() const;

    template <class Fn>  // Fn(VertexId, const VertexAttrs&, std::size_t degree)
    void for_each_vertex(Fn&& fn) const {
        for (const auto& rec : verts_) fn(rec.id, rec.attrs, rec.adj.size());
    }

    // --- model primitives ---------------------------------------------------
    // Ejection test: true iff (#negative links) / (#links) exceeds the
    // tolerance. A vertex with no links reports false; the degree-zero
    // removal rule handles that case instead.
    bool killing(VertexId id) const;

    // One id above every id ever inserted / one above every ordinal ever seen.
    VertexId next_vertex_id() const { return next_id_; }
    std::uint64_t next_ordinal() const { return next_ordinal_; }

    // Structural self-check used by tests: symmetry, no self-loops, no
    // parallel edges, cached counters in sync. Throws ContractViolation.
    void check_invariants() const;

private:
    struct VertexRec {
        VertexId id;
        VertexAttrs attrs;
        std::vector<std::pair<VertexId, EdgeSign>> adj;
        std::uint32_t neg_links = 0;
    };

    static std::uint64_t pair_key(VertexId u, VertexId v);

    VertexRec& rec(VertexId id);
    const VertexRec& rec(VertexId id) const;
    void erase_vertex_record(VertexId id);
    void erase_edge_record(std::size_t edge_idx);
    void drop_adjacency(VertexRec& r, VertexId other, EdgeSign sign);
    // Removes every isolated vertex in `candidates` except `keep`.
    std::vector<VertexId> sweep_isolated(const std::vector<VertexId>& candidates,
                                         std::optional<VertexId> keep);

    double tolerance_;
    std::vector<VertexRec> verts_;
    std::unordered_map<VertexId, std::uint32_t> index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_index_;
    VertexId next_id_ = 0;
    std::uint64_t next_ordinal_ = 0;
};

// Preferential-attachment distribution for a new edge of vertex `i`:
// candidates are all vertices other than i and not adjacent to i, weighted by
// fitness * degree. When that weighting is identically zero (no edges in the
// network, or zero-fitness throughout) the weights fall back to fitness
// alone, then to a uniform choice. Probabilities sum to 1; an empty candidate
// set yields an empty vector.
struct AttachmentWeight {
    VertexId id;
    double prob;
};
std::vector<AttachmentWeight> attachment_weights(const SignedNetwork& net, VertexId i);

// Draws positive with probability attrs.g, negative with attrs.h, else
// neutral, from a single uniform variate.
EdgeSign draw_sign(const VertexAttrs& attrs, Rng& rng);

}  // namespace beliefnet
