#pragma once

#include <cstdint>
#include <string>

#include "atlas/mdp.hpp"

namespace atlas {

// One flat record for every flag the front end accepts; each subcommand
// reads the slice it documents. Defaults mirror the library defaults.
struct RunConfig {
    std::string subcommand;
    std::string format = "json"; // "json" | "csv"
    std::string out;             // empty: stdout
    std::string cache_dir;       // empty: SYSTOLIC_ATLAS_CACHE env var
    std::string cmg_path;        // explicit input graph for lift/surface runs
    std::uint64_t seed = 0;
    int threads = 0;
    int v = 0;
    int v_max = 12;
    int report_v_max = 8;
    int g = 0;
    int g_min = 2;
    int g_max = 4;
    int r = 0;
    int m = 0;
    int n = 0;
    int cycle_cap = 3;
    double h = 0.25;
    int trials = 50;
    int vertex_cap = kMdpNeighborCap;
    double tolerance = 1e-12;
    bool no_lift = false;
};

// Full front end: parses argv, runs the subcommand, writes the payload to
// stdout or --out. Exit codes: 0 success, 2 validation/usage error, 3 when a
// guard limit stops the computation. Diagnostics go to stderr only.
int cli_main(int argc, char** argv);

} // namespace atlas
