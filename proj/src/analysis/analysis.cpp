#include "analysis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

namespace beliefnet::analysis {

DegreeHistogram degree_distribution(const SignedNetwork& net) {
    if (net.n_vertices() == 0)
        throw InsufficientData("degree distribution of an empty network");
    DegreeHistogram hist;
    hist.n_vertices = static_cast<double>(net.n_vertices());
    net.for_each_vertex([&](VertexId, const VertexAttrs&, std::size_t deg) {
        hist.probs[deg] += 1.0;
    });
    for (auto& [k, p] : hist.probs) {
        p /= hist.n_vertices;
        hist.support[k] = 1;
    }
    return hist;
}

DegreeHistogram average_histograms(std::span<const DegreeHistogram> hists) {
    if (hists.empty()) throw InsufficientData("no histograms to average");
    DegreeHistogram out;
    std::uint32_t runs = 0;
    double vertices = 0.0;
    for (const auto& h : hists) {
        runs += h.runs;
        vertices += h.n_vertices * h.runs;
        for (const auto& [k, p] : h.probs) out.probs[k] += p * h.runs;
        for (const auto& [k, s] : h.support) out.support[k] += s;
    }
    for (auto& [k, p] : out.probs) p /= runs;
    out.runs = runs;
    out.n_vertices = vertices / runs;
    return out;
}

PowerLawFit fit_power_law(const DegreeHistogram& hist, std::uint64_t k_min,
                          std::uint64_t k_max) {
    std::vector<double> xs, ys;
    for (const auto& [k, p] : hist.probs) {
        if (k < k_min || k > k_max || p <= 0.0 || k == 0) continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(p));
    }
    const std::size_t n = xs.size();
    if (n < 3)
        throw InsufficientData("power-law fit needs at least 3 non-empty bins in range, got " +
                               std::to_string(n));
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    PowerLawFit fit;
    fit.gamma = -slope;
    fit.intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    fit.k_min = k_min;
    fit.k_max = k_max;
    return fit;
}

std::pair<std::uint64_t, std::uint64_t> default_fit_window(const DegreeHistogram& hist) {
    const std::uint32_t needed = std::min<std::uint32_t>(5, hist.runs);
    std::uint64_t k_max = 0;
    for (const auto& [k, s] : hist.support)
        if (s >= needed && hist.prob(k) > 0.0) k_max = std::max(k_max, k);
    if (k_max < 2 && !hist.probs.empty()) k_max = hist.probs.rbegin()->first;
    return {2, k_max};
}

std::optional<PeakSplit> find_peak_split(const DegreeHistogram& hist) {
    std::vector<std::uint64_t> ks;
    for (const auto& [k, p] : hist.probs)
        if (p > 0.0 && k > 0) ks.push_back(k);
    if (ks.size() < 2) return std::nullopt;
    std::size_t best = 0;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        const double ratio = static_cast<double>(ks[i + 1]) / static_cast<double>(ks[i]);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = i;
        }
    }
    PeakSplit split;
    split.bulk_max_k = ks[best];
    split.peak_min_k = ks[best + 1];
    split.peak_max_k = ks.back();
    split.gap_ratio = best_ratio;
    for (std::size_t i = best + 1; i < ks.size(); ++i) split.peak_mass += hist.prob(ks[i]);
    return split;
}

namespace {

// Dense index mapping plus adjacency-by-index for BFS work.
struct CompactGraph {
    std::vector<VertexId> ids;
    std::unordered_map<VertexId, std::uint32_t> index;
    std::vector<std::vector<std::uint32_t>> adj;

    explicit CompactGraph(const SignedNetwork& net) {
        ids.reserve(net.n_vertices());
        net.for_each_vertex([&](VertexId id, const VertexAttrs&, std::size_t) {
            index.emplace(id, static_cast<std::uint32_t>(ids.size()));
            ids.push_back(id);
        });
        adj.resize(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (const auto& [nb, sign] : net.neighbors(ids[i]))
                adj[i].push_back(index.at(nb));
        }
    }

    std::size_t size() const { return ids.size(); }
};

std::vector<std::uint32_t> component_labels(const CompactGraph& g, std::uint32_t& n_comps) {
    std::vector<std::uint32_t> label(g.size(), UINT32_MAX);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (label[s] != UINT32_MAX) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : g.adj[v]) {
                if (label[w] == UINT32_MAX) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    n_comps = next;
    return label;
}

// Members of the largest component, as compact indexes.
std::vector<std::uint32_t> largest_component(const CompactGraph& g) {
    std::uint32_t n_comps = 0;
    const std::vector<std::uint32_t> label = component_labels(g, n_comps);
    std::vector<std::size_t> sizes(n_comps, 0);
    for (std::uint32_t l : label) ++sizes[l];
    const std::uint32_t best = static_cast<std::uint32_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (label[v] == best) members.push_back(v);
    return members;
}

// Sum of BFS distances from `source` to every reachable vertex.
std::uint64_t bfs_distance_sum(const CompactGraph& g, std::uint32_t source,
                               std::vector<std::uint32_t>& dist,
                               std::vector<std::uint32_t>& queue) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    std::uint64_t sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t w : g.adj[v]) {
            if (dist[w] != UINT32_MAX) continue;
            dist[w] = dist[v] + 1;
            sum += dist[w];
            queue.push_back(w);
        }
    }
    return sum;
}

}  // namespace

std::vector<std::size_t> component_sizes(const SignedNetwork& net) {
    CompactGraph g(net);
    std::uint32_t n_comps = 0;
    const std::vector<std::uint32_t> label = component_labels(g, n_comps);
    std::vector<std::size_t> sizes(n_comps, 0);
    for (std::uint32_t l : label) ++sizes[l];
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

double mean_distance_exact(const SignedNetwork& net) {
    CompactGraph g(net);
    const std::vector<std::uint32_t> members = largest_component(g);
    const std::size_t m = members.size();
    if (m < 2) throw InsufficientData("mean distance needs at least 2 connected vertices");
    std::vector<std::uint32_t> dist(g.size());
    std::vector<std::uint32_t> queue;
    queue.reserve(m);
    double total = 0.0;
    for (std::uint32_t s : members)
        total += static_cast<double>(bfs_distance_sum(g, s, dist, queue));
    return total / (static_cast<double>(m) * static_cast<double>(m - 1));
}

double mean_distance_sampled(const SignedNetwork& net, std::uint64_t sample_pairs, Rng& rng) {
    if (sample_pairs == 0) throw InsufficientData("sample_pairs must be positive");
    CompactGraph g(net);
    const std::vector<std::uint32_t> members = largest_component(g);
    const std::size_t m = members.size();
    if (m < 2) throw InsufficientData("mean distance needs at least 2 connected vertices");
    std::vector<std::uint32_t> dist(g.size());
    std::vector<std::uint32_t> queue;
    queue.reserve(m);
    double total = 0.0;
    for (std::uint64_t k = 0; k < sample_pairs; ++k) {
        const std::size_t si = static_cast<std::size_t>(rng.uniform_below(m));
        std::size_t ti = static_cast<std::size_t>(rng.uniform_below(m - 1));
        if (ti >= si) ++ti;
        bfs_distance_sum(g, members[si], dist, queue);
        total += static_cast<double>(dist[members[ti]]);
    }
    return total / static_cast<double>(sample_pairs);
}

double mean_distance(const SignedNetwork& net, std::uint64_t sample_pairs, Rng& rng) {
    CompactGraph g(net);
    const std::vector<std::uint32_t> members = largest_component(g);
    if (members.size() <= kExactDistanceLimit) return mean_distance_exact(net);
    return mean_distance_sampled(net, sample_pairs == 0 ? 10000 : sample_pairs, rng);
}

void OrdinalDegreeAccumulator::add(const SignedNetwork& net) {
    net.for_each_vertex([&](VertexId, const VertexAttrs& a, std::size_t deg) {
        auto& slot = acc_[a.ordinal];
        slot.first += static_cast<double>(deg);
        slot.second += 1;
    });
}

std::map<std::uint64_t, OrdinalDegree> OrdinalDegreeAccumulator::finish() const {
    std::map<std::uint64_t, OrdinalDegree> out;
    for (const auto& [ordinal, slot] : acc_) {
        out[ordinal] = OrdinalDegree{slot.first / slot.second, slot.second};
    }
    return out;
}

std::map<std::uint64_t, OrdinalDegree> degree_by_ordinal(
    std::span<const SignedNetwork* const> runs) {
    OrdinalDegreeAccumulator acc;
    for (const SignedNetwork* net : runs) acc.add(*net);
    return acc.finish();
}

}  // namespace beliefnet::analysis
