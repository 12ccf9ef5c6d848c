#include "atlas/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "atlas/errors.hpp"
#include "atlas/prng.hpp"

namespace atlas {

namespace {

constexpr int kHardVertexCap = 14;

void check_census_v(int V, const CensusConfig& cfg) {
    if (V < 2 || V % 2 != 0) throw ParamError("census needs an even vertex count >= 2");
    int cap = std::min(cfg.v_max, kHardVertexCap);
    if (V > cap) throw LimitError("census vertex count exceeds the configured cap");
}

// ---- matching enumeration ----
//
// The next pair always involves the lowest unmatched half-edge h at vertex
// s. Unmatched siblings within one vertex are interchangeable, as are all
// completely fresh vertices, so it suffices to try: the lowest unmatched
// sibling of h (a loop), the lowest free half-edge of every partially
// matched vertex above s, and the first half-edge of one fresh vertex.
// Every introduction attaches to the component under construction, so when
// h lands on a fresh vertex while others are already in play the prefix is
// a closed component and the branch dies. Duplicate leaves (structurally
// symmetric continuations) remain possible; leaves are first collapsed by
// their labeled edge multiset, which is cheap and removes most of them, and
// the survivors are deduped by canonical code, which is what the oracle
// equality test anchors.

struct MatchPrefix {
    std::vector<int> pairing;
    int used;
};

// One map entry per labeled multigraph: 3V/2 edge bytes (u*16+v, u <= v,
// sorted), packed into a fixed 24-byte word array so V=14 runs do not churn
// the heap.
struct LeafKey {
    std::array<std::uint64_t, 3> w{};
    bool operator==(const LeafKey&) const = default;
};

struct LeafKeyHash {
    std::size_t operator()(const LeafKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t x : k.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct LeafSink {
    std::unordered_set<LeafKey, LeafKeyHash> seen_labeled;
    std::unordered_set<std::string> codes;

    void accept(const std::vector<int>& pairing) {
        const int H = static_cast<int>(pairing.size());
        std::array<char, 24> bytes{};
        int n = 0;
        for (int a = 0; a < H; ++a) {
            int b = pairing[a];
            if (a < b) bytes[n++] = static_cast<char>((a / 3) * 16 + b / 3);
        }
        std::sort(bytes.begin(), bytes.begin() + n);
        LeafKey key;
        std::memcpy(key.w.data(), bytes.data(), bytes.size());
        if (seen_labeled.size() > (1u << 22)) seen_labeled.clear(); // bound memory
        if (!seen_labeled.insert(key).second) return;
        codes.insert(canonical_code(CubicMultigraph::from_pairing(H / 3, pairing)));
    }
};

void expand(std::vector<int>& pairing, int used, int cap,
            std::vector<MatchPrefix>* prefixes, LeafSink* sink) {
    const int H = static_cast<int>(pairing.size());
    int h = 0;
    while (h < H && pairing[h] >= 0) ++h;
    if (h == H) {
        sink->accept(pairing);
        return;
    }
    if (prefixes && cap == 0) {
        prefixes->push_back({pairing, used});
        return;
    }
    int s = h / 3;
    if (s >= used) {
        if (used > 0) return; // closed prefix: provably disconnected
        used = 1;
    }
    auto match = [&](int t, int next_used) {
        pairing[h] = t;
        pairing[t] = h;
        expand(pairing, next_used, cap - 1, prefixes, sink);
        pairing[h] = -1;
        pairing[t] = -1;
    };
    for (int t = h + 1; t < 3 * (s + 1); ++t)
        if (pairing[t] < 0) { match(t, used); break; }
    for (int sp = s + 1; sp < used; ++sp)
        for (int t = 3 * sp; t < 3 * sp + 3; ++t)
            if (pairing[t] < 0) { match(t, used); break; }
    if (used < H / 3) match(3 * used, used + 1);
}

CensusTable generate(int V, int threads) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;

    std::vector<int> pairing(3 * V, -1);
    std::vector<MatchPrefix> prefixes;
    LeafSink seed_sink;
    int cap = V <= 4 ? 1 : 4;
    expand(pairing, 0, cap, &prefixes, &seed_sink); // tiny V can finish here

    std::vector<LeafSink> partial(threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&](int w) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            auto local = prefixes[i].pairing;
            expand(local, prefixes[i].used, -1, nullptr, &partial[w]);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();

    for (auto& p : partial) seed_sink.codes.merge(p.codes);
    CensusTable table;
    table.V = V;
    table.codes.assign(seed_sink.codes.begin(), seed_sink.codes.end());
    std::sort(table.codes.begin(), table.codes.end());
    table.count = static_cast<int>(table.codes.size());
    return table;
}

// Censuses get rebuilt by several operations in one process (simple counts,
// sampling, neighbor closure); they are immutable, so share them. Keyed by
// thread count as well so determinism across thread counts stays testable.
// Only used when no cache directory applies: with one, the disk file is the
// cache and every call exercises it.
const CensusTable& memoized(int V, int threads) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, CensusTable> tables;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(V, threads);
    auto it = tables.find(key);
    if (it == tables.end()) it = tables.emplace(key, generate(V, threads)).first;
    return it->second;
}

// ---- cache ----

std::filesystem::path cache_file(const std::string& dir, int V) {
    return std::filesystem::path(dir) / ("census_V" + std::to_string(V) + ".txt");
}

bool load_cache(const std::string& dir, int V, CensusTable& out) {
    std::ifstream in(cache_file(dir, V));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    char probe = 0;
    int v = 0, n = 0;
    if (std::sscanf(header.c_str(), "census v1 V=%d count=%d%c", &v, &n, &probe) != 2)
        return false;
    if (v != V || n < 1) return false;
    CensusTable table;
    table.V = V;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) return false;
        if (!table.codes.empty() && line <= table.codes.back()) return false;
        table.codes.push_back(line);
    }
    if (static_cast<int>(table.codes.size()) != n) return false;
    table.count = n;
    out = std::move(table);
    return true;
}

void save_cache(const std::string& dir, const CensusTable& table) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return; // caching is best effort
    std::ofstream out(cache_file(dir, table.V));
    if (!out) return;
    out << "census v1 V=" << table.V << " count=" << table.count << "\n";
    for (const auto& code : table.codes) out << code << "\n";
}

} // namespace

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("SYSTOLIC_ATLAS_CACHE");
    return env ? std::string(env) : std::string();
}

CensusTable enumerate_census(int V, const CensusConfig& cfg) {
    check_census_v(V, cfg);
    std::string dir = resolve_cache_dir(cfg.cache_dir);
    if (dir.empty()) return memoized(V, cfg.threads);
    CensusTable table;
    if (load_cache(dir, V, table)) return table;
    table = generate(V, cfg.threads);
    save_cache(dir, table);
    return table;
}

int count_simple(int V, const CensusConfig& cfg) {
    auto table = enumerate_census(V, cfg);
    int n = 0;
    for (const auto& code : table.codes)
        if (girth(graph_from_code(code)) >= 3) ++n;
    return n;
}

CubicMultigraph sample_uniform(int V, std::uint64_t seed, const CensusConfig& cfg) {
    auto table = enumerate_census(V, cfg);
    SplitMix64 rng(seed);
    return graph_from_code(table.codes[rng.below(table.count)]);
}

CubicMultigraph sample_configuration(int V, std::uint64_t seed) {
    if (V < 2 || V % 2 != 0)
        throw ParamError("configuration sampling needs an even vertex count >= 2");
    const int H = 3 * V;
    SplitMix64 rng(seed);
    for (;;) {
        std::vector<int> pairing(H, -1);
        for (int h = 0; h < H; ++h) {
            if (pairing[h] >= 0) continue;
            std::vector<int> open;
            for (int t = h + 1; t < H; ++t)
                if (pairing[t] < 0) open.push_back(t);
            int t = open[rng.below(open.size())];
            pairing[h] = t;
            pairing[t] = h;
        }
        try {
            return CubicMultigraph::from_pairing(V, std::move(pairing));
        } catch (const DisconnectedError&) {
            // resample
        }
    }
}

std::vector<GrowthRow> growth_report(int V_max, const CensusConfig& cfg) {
    std::vector<GrowthRow> rows;
    for (int V = 2; V <= V_max; V += 2) {
        GrowthRow row;
        row.V = V;
        row.g = V / 2 + 1;
        row.count = enumerate_census(V, cfg).count;
        row.vertex_scale = BigNat::pow(row.g, 2 * row.g);
        row.ratio = std::log(static_cast<double>(row.count)) /
                    (2.0 * row.g * std::log(static_cast<double>(row.g)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace atlas
