#include "core/network.hpp"

#include <algorithm>
#include <string>

namespace beliefnet {

namespace {

std::string id_str(VertexId v) { return std::to_string(v); }

}  // namespace

SignedNetwork::SignedNetwork(double tolerance) : tolerance_(tolerance) {
    if (tolerance < 0.0 || tolerance > 1.0)
        throw ConfigError("tolerance must lie in [0, 1]");
}

std::uint64_t SignedNetwork::pair_key(VertexId u, VertexId v) {
    const VertexId lo = std::min(u, v);
    const VertexId hi = std::max(u, v);
    return (lo << 32) | hi;
}

SignedNetwork::VertexRec& SignedNetwork::rec(VertexId id) {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ContractViolation("unknown vertex " + id_str(id));
    return verts_[it->second];
}

const SignedNetwork::VertexRec& SignedNetwork::rec(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw ContractViolation("unknown vertex " + id_str(id));
    return verts_[it->second];
}

void SignedNetwork::add_vertex(VertexId id, const VertexAttrs& attrs) {
    if (id >= (1ULL << 32))
        throw ContractViolation("vertex ids must fit in 32 bits, got " + id_str(id));
    if (index_.count(id))
        throw ContractViolation("vertex " + id_str(id) + " already exists");
    if (!attrs.valid())
        throw ContractViolation("invalid attributes for vertex " + id_str(id));
    index_.emplace(id, static_cast<std::uint32_t>(verts_.size()));
    verts_.push_back(VertexRec{id, attrs, {}, 0});
    next_id_ = std::max(next_id_, id + 1);
    next_ordinal_ = std::max(next_ordinal_, attrs.ordinal + 1);
}

const VertexAttrs& SignedNetwork::attrs(VertexId id) const { return rec(id).attrs; }

std::size_t SignedNetwork::degree(VertexId id) const { return rec(id).adj.size(); }

std::size_t SignedNetwork::negative_degree(VertexId id) const { return rec(id).neg_links; }

const std::vector<std::pair<VertexId, EdgeSign>>& SignedNetwork::neighbors(VertexId id) const {
    return rec(id).adj;
}

bool SignedNetwork::has_edge(VertexId u, VertexId v) const {
    return edge_index_.count(pair_key(u, v)) != 0;
}

std::optional<EdgeSign> SignedNetwork::edge_sign(VertexId u, VertexId v) const {
    auto it = edge_index_.find(pair_key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return edges_[it->second].sign;
}

void SignedNetwork::add_edge(VertexId u, VertexId v, EdgeSign sign) {
    if (u == v)
        throw ContractViolation("self-loop on vertex " + id_str(u));
    VertexRec& ru = rec(u);
    VertexRec& rv = rec(v);
    const std::uint64_t key = pair_key(u, v);
    if (edge_index_.count(key))
        throw ContractViolation("edge (" + id_str(u) + ", " + id_str(v) + ") already exists");
    edge_index_.emplace(key, static_cast<std::uint32_t>(edges_.size()));
    edges_.push_back(Edge{u, v, sign});
    ru.adj.emplace_back(v, sign);
    rv.adj.emplace_back(u, sign);
    if (sign == EdgeSign::Negative) {
        ++ru.neg_links;
        ++rv.neg_links;
    }
}

void SignedNetwork::drop_adjacency(VertexRec& r, VertexId other, EdgeSign sign) {
    auto it = std::find_if(r.adj.begin(), r.adj.end(),
                           [&](const auto& p) { return p.first == other; });
    r.adj.erase(it);
    if (sign == EdgeSign::Negative) --r.neg_links;
}

void SignedNetwork::erase_edge_record(std::size_t edge_idx) {
    const Edge e = edges_[edge_idx];
    edge_index_.erase(pair_key(e.u, e.v));
    if (edge_idx + 1 != edges_.size()) {
        edges_[edge_idx] = edges_.back();
        edge_index_[pair_key(edges_[edge_idx].u, edges_[edge_idx].v)] =
            static_cast<std::uint32_t>(edge_idx);
    }
    edges_.pop_back();
}

void SignedNetwork::erase_vertex_record(VertexId id) {
    const std::uint32_t idx = index_.at(id);
    index_.erase(id);
    if (idx + 1 != verts_.size()) {
        verts_[idx] = std::move(verts_.back());
        index_[verts_[idx].id] = idx;
    }
    verts_.pop_back();
}

std::vector<VertexId> SignedNetwork::sweep_isolated(const std::vector<VertexId>& candidates,
                                                    std::optional<VertexId> keep) {
    std::vector<VertexId> removed;
    for (VertexId c : candidates) {
        if (keep && *keep == c) continue;
        auto it = index_.find(c);
        if (it == index_.end()) continue;
        if (!verts_[it->second].adj.empty()) continue;
        erase_vertex_record(c);
        removed.push_back(c);
    }
    return removed;
}

std::vector<VertexId> SignedNetwork::remove_edge(VertexId u, VertexId v) {
    auto it = edge_index_.find(pair_key(u, v));
    if (it == edge_index_.end())
        throw ContractViolation("edge (" + id_str(u) + ", " + id_str(v) + ") does not exist");
    const EdgeSign sign = edges_[it->second].sign;
    erase_edge_record(it->second);
    drop_adjacency(rec(u), v, sign);
    drop_adjacency(rec(v), u, sign);
    return sweep_isolated({u, v}, std::nullopt);
}

std::vector<VertexId> SignedNetwork::detach_vertex(VertexId v) {
    VertexRec& rv = rec(v);
    std::vector<VertexId> former;
    former.reserve(rv.adj.size());
    for (const auto& [other, sign] : rv.adj) {
        former.push_back(other);
        erase_edge_record(edge_index_.at(pair_key(v, other)));
        drop_adjacency(rec(other), v, sign);
    }
    rv.adj.clear();
    rv.neg_links = 0;
    return sweep_isolated(former, v);
}

std::vector<VertexId> SignedNetwork::remove_vertex(VertexId v) {
    std::vector<VertexId> cascaded = detach_vertex(v);
    erase_vertex_record(v);
    std::vector<VertexId> removed;
    removed.reserve(cascaded.size() + 1);
    removed.push_back(v);
    removed.insert(removed.end(), cascaded.begin(), cascaded.end());
    return removed;
}

std::size_t SignedNetwork::forget_edges(std::size_t count, Rng& rng) {
    const std::size_t n = std::min(count, edges_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = static_cast<std::size_t>(rng.uniform_below(edges_.size()));
        const Edge e = edges_[idx];
        remove_edge(e.u, e.v);
    }
    return n;
}

std::vector<VertexId> SignedNetwork::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(verts_.size());
    for (const auto& r : verts_) ids.push_back(r.id);
    return ids;
}

std::vector<VertexId> SignedNetwork::vertex_ids_sorted() const {
    std::vector<VertexId> ids = vertex_ids();
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool SignedNetwork::killing(VertexId id) const {
    const VertexRec& r = rec(id);
    if (r.adj.empty()) return false;
    return static_cast<double>(r.neg_links) >
           tolerance_ * static_cast<double>(r.adj.size());
}

void SignedNetwork::check_invariants() const {
    if (index_.size() != verts_.size())
        throw ContractViolation("vertex index out of sync");
    if (edge_index_.size() != edges_.size())
        throw ContractViolation("edge index out of sync");
    std::size_t adj_total = 0;
    for (const auto& r : verts_) {
        adj_total += r.adj.size();
        std::uint32_t neg = 0;
        for (const auto& [other, sign] : r.adj) {
            if (other == r.id)
                throw ContractViolation("self-loop on vertex " + id_str(r.id));
            auto it = edge_index_.find(pair_key(r.id, other));
            if (it == edge_index_.end())
                throw ContractViolation("adjacency names a missing edge");
            if (edges_[it->second].sign != sign)
                throw ContractViolation("adjacency sign mismatch");
            if (!has_vertex(other))
                throw ContractViolation("adjacency names a missing vertex");
            if (sign == EdgeSign::Negative) ++neg;
        }
        if (neg != r.neg_links)
            throw ContractViolation("negative-link counter out of sync");
    }
    if (adj_total != 2 * edges_.size())
        throw ContractViolation("adjacency/edge-list disagreement");
    for (const auto& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw ContractViolation("edge names a missing vertex");
    }
}

std::vector<AttachmentWeight> attachment_weights(const SignedNetwork& net, VertexId i) {
    std::vector<AttachmentWeight> out;
    double total_fk = 0.0;
    double total_f = 0.0;
    net.for_each_vertex([&](VertexId id, const VertexAttrs& a, std::size_t deg) {
        if (id == i || net.has_edge(i, id)) return;
        const double fk = a.fitness * static_cast<double>(deg);
        out.push_back({id, fk});
        total_fk += fk;
        total_f += a.fitness;
    });
    if (out.empty()) return out;
    if (total_fk > 0.0) {
        for (auto& w : out) w.prob /= total_fk;
    } else if (total_f > 0.0) {
        for (auto& w : out) w.prob = net.attrs(w.id).fitness / total_f;
    } else {
        const double uniform = 1.0 / static_cast<double>(out.size());
        for (auto& w : out) w.prob = uniform;
    }
    return out;
}

EdgeSign draw_sign(const VertexAttrs& attrs, Rng& rng) {
    const double r = rng.uniform01();
    if (r < attrs.g) return EdgeSign::Positive;
    if (r < attrs.g + attrs.h) return EdgeSign::Negative;
    return EdgeSign::Neutral;
}

}  // namespace beliefnet
