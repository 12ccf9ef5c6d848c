#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atlas/bignat.hpp"
#include "atlas/multigraph.hpp"

namespace atlas {

struct CensusTable {
    int V = 0;
    std::vector<CanonicalCode> codes; // strictly sorted, duplicate-free
    int count = 0;                    // |codes|
};

struct CensusConfig {
    int v_max = 12;        // raise to 14 for the largest supported census
    std::string cache_dir; // empty: fall back to the SYSTOLIC_ATLAS_CACHE env var
    int threads = 0;       // 0: hardware concurrency
};

// Flag value wins over the SYSTOLIC_ATLAS_CACHE environment variable; empty
// result disables caching.
std::string resolve_cache_dir(const std::string& flag_value);

// Complete census of isomorphism classes of connected cubic multigraphs on V
// vertices. Generation pairs 3V half-edges with symmetry pruning and dedupes
// by canonical code; output order is sorted and independent of thread count.
CensusTable enumerate_census(int V, const CensusConfig& cfg = {});

// Census entries with girth >= 3 (no loops, no parallel edges).
int count_simple(int V, const CensusConfig& cfg = {});

// Uniform over isomorphism classes, reproducible bit-for-bit given (V, seed).
CubicMultigraph sample_uniform(int V, std::uint64_t seed, const CensusConfig& cfg = {});

// Uniform perfect matching on 3V half-edges, rejected until connected. A
// different measure than sample_uniform: classes are weighted by matching
// counts, which is what makes it usable past the census range.
CubicMultigraph sample_configuration(int V, std::uint64_t seed);

struct GrowthRow {
    int g = 0;              // V = 2g - 2
    int V = 0;
    long long count = 0;
    BigNat vertex_scale;    // g^(2g)
    double ratio = 0.0;     // log(count) / (2g log g)
};

std::vector<GrowthRow> growth_report(int V_max, const CensusConfig& cfg = {});

} // namespace atlas
