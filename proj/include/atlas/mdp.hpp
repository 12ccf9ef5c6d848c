#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "atlas/bignat.hpp"
#include "atlas/multigraph.hpp"

namespace atlas {

// Graph-move metric space: vertices are isomorphism classes of connected
// cubic multigraphs on V = 2g-2 vertices, edges join classes related by one
// simultaneous move set. Neighbor generation is exponential in the matching
// count, so it refuses to run above a vertex cap unless the caller raises it.

inline constexpr int kMdpNeighborCap = 10;

struct MdpVertex {
    CanonicalCode code;
    int genus = 0; // V = 2g - 2
};

MdpVertex mdp_vertex(const CanonicalCode& code);
MdpVertex mdp_vertex(const CubicMultigraph& g);

// All classes one move set away (every non-empty vertex-disjoint set of
// non-loop edges, every variant assignment), deduplicated, self excluded,
// sorted. Memoized per process.
std::vector<std::string> neighbor_codes(const CanonicalCode& code,
                                        int v_cap = kMdpNeighborCap);
std::vector<MdpVertex> neighbors(const MdpVertex& v, int v_cap = kMdpNeighborCap);

// code -> distance for everything within r move sets.
std::map<std::string, int> ball(const MdpVertex& v, int r,
                                int v_cap = kMdpNeighborCap);

struct DistanceResult {
    bool reached = false;
    int value = 0; // distance when reached, else the radius that was exhausted
};

DistanceResult distance_to_set(const MdpVertex& v,
                               const std::function<bool(const CubicMultigraph&)>& pred,
                               int r_max, int v_cap = kMdpNeighborCap);

// (3^{g-1})^r, exact.
BigNat ball_bound(int g, int r);

// f(K) = sum_{i=1}^{K-1} 2^i K^2 = (2^K - 2) K^2, exact.
BigNat intersection_bound_f(int K);

struct CountingEstimates {
    int loops = 0;                  // ceil(h*g)
    int reduced_vertices = 0;       // 2g - 2 - 2*loops
    BigNat reverse_count_bound;     // 2^{3(g - loops) - 3}
    int reduction_rounds_bound = 0; // ceil(log2 L) + 2
    int packing_threshold = 0;      // floor((2g - 2) / (3 * 2^{L-1}))
};

CountingEstimates counting_estimates(int g, double h, int L);

struct GenusSparsity {
    int genus = 0;
    int vertices = 0;
    long long census_count = 0;
    long long badset_size = 0;
    double fraction = 0.0;       // badset_size / census_count
    std::string packing_method;  // "exact" or "greedy"
    bool empty_set_error = false; // badset empty or the whole census
    std::vector<int> distances;  // one sample per trial, -1 when unreachable
    int median_distance = 0;     // lower median, -1 when unreachable
    int diameter = 0;
};

struct SparsityReport {
    int g_min = 0, g_max = 0, L = 0, trials = 0;
    double h = 0.0;
    std::uint64_t seed = 0;
    std::vector<GenusSparsity> rows;
};

// For each genus: how much of the census carries >= ceil(h*g) disjoint
// cycles of length <= L, and how far uniform samples sit from that set.
SparsityReport sparsity_experiment(int g_min, int g_max, int L, double h,
                                   int trials, std::uint64_t seed,
                                   int v_cap = kMdpNeighborCap);

std::string sparsity_csv(const SparsityReport& report);

} // namespace atlas
