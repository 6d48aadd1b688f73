#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "core/network.hpp"
#include "core/rng.hpp"

namespace beliefnet::analysis {

// Normalized degree distribution. `support[k]` counts how many source
// networks contributed a non-empty bin at k (1 everywhere for a single
// network); `runs` is the number of networks averaged in.
struct DegreeHistogram {
    std::map<std::uint64_t, double> probs;
    double n_vertices = 0.0;
    std::uint32_t runs = 1;
    std::map<std::uint64_t, std::uint32_t> support;

    double prob(std::uint64_t k) const {
        auto it = probs.find(k);
        return it == probs.end() ? 0.0 : it->second;
    }
};

// P(k) = (#vertices of degree k) / n. Throws InsufficientData on an empty
// network.
DegreeHistogram degree_distribution(const SignedNetwork& net);

// Pointwise mean across runs; absent bins count as zero.
DegreeHistogram average_histograms(std::span<const DegreeHistogram> hists);

struct PowerLawFit {
    double gamma = 0.0;  // reported positive: P(k) ~ k^-gamma
    double intercept = 0.0;
    double r_squared = 0.0;
    std::uint64_t k_min = 0;
    std::uint64_t k_max = 0;
};

// Ordinary least squares of log P(k) on log k over the non-empty bins inside
// [k_min, k_max]. Throws InsufficientData with fewer than 3 usable bins.
PowerLawFit fit_power_law(const DegreeHistogram& hist, std::uint64_t k_min, std::uint64_t k_max);

// Default fit window: k_min = 2, k_max = the largest k still backed by at
// least min(5, runs) contributing runs (the sparse tail carries mostly noise).
std::pair<std::uint64_t, std::uint64_t> default_fit_window(const DegreeHistogram& hist);

// Split of a histogram at the widest multiplicative gap between consecutive
// non-empty bins; identifies an isolated high-degree peak when one exists.
struct PeakSplit {
    std::uint64_t bulk_max_k = 0;  // last non-empty bin below the gap
    std::uint64_t peak_min_k = 0;  // first non-empty bin above the gap
    std::uint64_t peak_max_k = 0;
    double peak_mass = 0.0;   // total probability above the gap
    double gap_ratio = 1.0;   // peak_min_k / bulk_max_k
};
std::optional<PeakSplit> find_peak_split(const DegreeHistogram& hist);

// Mean shortest-path distance between vertex pairs of the largest connected
// component ("diameter" in the loose sense). Exact all-pairs BFS when the
// component has at most `exact_limit` vertices, otherwise a Monte Carlo mean
// over sample_pairs random pairs. Throws InsufficientData when the component
// has fewer than 2 vertices.
double mean_distance(const SignedNetwork& net, std::uint64_t sample_pairs, Rng& rng);
double mean_distance_exact(const SignedNetwork& net);
double mean_distance_sampled(const SignedNetwork& net, std::uint64_t sample_pairs, Rng& rng);

inline constexpr std::size_t kExactDistanceLimit = 2000;

// Connected component sizes, largest first.
std::vector<std::size_t> component_sizes(const SignedNetwork& net);

// Mean final degree of the vertex inserted at each ordinal across runs,
// restricted to runs where it survived; survivors counted alongside.
struct OrdinalDegree {
    double mean_degree = 0.0;
    std::uint32_t survivors = 0;
};
class OrdinalDegreeAccumulator {
public:
    void add(const SignedNetwork& net);
    std::map<std::uint64_t, OrdinalDegree> finish() const;

private:
    std::map<std::uint64_t, std::pair<double, std::uint32_t>> acc_;
};
std::map<std::uint64_t, OrdinalDegree> degree_by_ordinal(
    std::span<const SignedNetwork* const> runs);

}  // namespace beliefnet::analysis
