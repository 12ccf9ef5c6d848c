#include "atlas/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <mutex>
#include <set>

#include "atlas/census.hpp"
#include "atlas/errors.hpp"
#include "atlas/prng.hpp"
#include "atlas/rewrite.hpp"

namespace atlas {

namespace {

void check_cap(int V, int v_cap) {
    if (V > v_cap) {
        throw LimitError("neighbor generation capped at V <= " + std::to_string(v_cap) +
                         ", got V = " + std::to_string(V));
    }
}

// every maximal-or-not matching of non-loop edges, non-empty
std::vector<std::vector<int>> nonloop_matchings(const CubicMultigraph& g) {
    std::vector<int> nonloop;
    for (const auto& e : g.edges())
        if (!e.loop) nonloop.push_back(e.id);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(g.vertex_count(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nonloop.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        const auto& e = g.edge(nonloop[i]);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            cur.push_back(nonloop[i]);
            self(self, i + 1);
            cur.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return out;
}

std::vector<std::string> compute_neighbors(const CubicMultigraph& g,
                                           const std::string& self) {
    std::set<std::string> out;
    // variant masks frequently land on the same labeled graph; dedupe on the
    // raw edge list before paying for canonicalization
    std::set<std::vector<std::pair<int, int>>> seen_labeled;
    for (const auto& matching : nonloop_matchings(g)) {
        const int k = static_cast<int>(matching.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            MoveSet ms;
            for (int j = 0; j < k; ++j)
                ms.moves.push_back({matching[j], (mask >> j) & 1 ? MoveVariant::B
                                                                 : MoveVariant::A});
            auto moved = apply_moveset(g, ms);
            if (!seen_labeled.insert(moved.edge_list()).second) continue;
            auto code = canonical_code(moved);
            if (code != self) out.insert(std::move(code));
        }
    }
    return {out.begin(), out.end()};
}

std::mutex g_neighbor_mutex;
std::map<std::string, std::vector<std::string>>& neighbor_memo() {
    static std::map<std::string, std::vector<std::string>> memo;
    return memo;
}

} // namespace

MdpVertex mdp_vertex(const CubicMultigraph& g) {
    return {canonical_code(g), g.vertex_count() / 2 + 1};
}

MdpVertex mdp_vertex(const CanonicalCode& code) {
    return mdp_vertex(graph_from_code(code));
}

std::vector<std::string> neighbor_codes(const CanonicalCode& code, int v_cap) {
    auto g = graph_from_code(code);
    check_cap(g.vertex_count(), v_cap);
    auto self = canonical_code(g);
    {
        std::lock_guard<std::mutex> lock(g_neighbor_mutex);
        auto it = neighbor_memo().find(self);
        if (it != neighbor_memo().end()) return it->second;
    }
    auto result = compute_neighbors(g, self);
    std::lock_guard<std::mutex> lock(g_neighbor_mutex);
    return neighbor_memo().emplace(self, std::move(result)).first->second;
}

std::vector<MdpVertex> neighbors(const MdpVertex& v, int v_cap) {
    std::vector<MdpVertex> out;
    for (const auto& code : neighbor_codes(v.code, v_cap))
        out.push_back({code, v.genus});
    return out;
}

std::map<std::string, int> ball(const MdpVertex& v, int r, int v_cap) {
    if (r < 0) throw ParamError("ball radius must be >= 0");
    auto start = mdp_vertex(v.code); // normalize the label
    check_cap(graph_from_code(start.code).vertex_count(), v_cap);
    std::map<std::string, int> dist{{start.code, 0}};
    std::deque<std::string> frontier{start.code};
    while (!frontier.empty()) {
        auto cur = std::move(frontier.front());
        frontier.pop_front();
        int d = dist[cur];
        if (d == r) continue;
        for (const auto& nxt : neighbor_codes(cur, v_cap)) {
            if (dist.emplace(nxt, d + 1).second) frontier.push_back(nxt);
        }
    }
    return dist;
}

DistanceResult distance_to_set(const MdpVertex& v,
                               const std::function<bool(const CubicMultigraph&)>& pred,
                               int r_max, int v_cap) {
    if (r_max < 0) throw ParamError("search radius must be >= 0");
    auto start = mdp_vertex(v.code);
    check_cap(graph_from_code(start.code).vertex_count(), v_cap);
    if (pred(graph_from_code(start.code))) return {true, 0};
    std::map<std::string, int> dist{{start.code, 0}};
    std::deque<std::string> frontier{start.code};
    while (!frontier.empty()) {
        auto cur = std::move(frontier.front());
        frontier.pop_front();
        int d = dist[cur];
        if (d == r_max) continue;
        for (const auto& nxt : neighbor_codes(cur, v_cap)) {
            if (!dist.emplace(nxt, d + 1).second) continue;
            if (pred(graph_from_code(nxt))) return {true, d + 1};
            frontier.push_back(nxt);
        }
    }
    return {false, r_max};
}

BigNat ball_bound(int g, int r) {
    if (g < 2 || r < 0) throw ParamError("ball bound needs g >= 2, r >= 0");
    return BigNat::pow(3, static_cast<std::uint64_t>(g - 1) * r);
}

BigNat intersection_bound_f(int K) {
    if (K < 1) throw ParamError("f(K) needs K >= 1");
    BigNat f = BigNat::pow(2, static_cast<std::uint64_t>(K));
    f.sub_small(2);
    f.mul_small(static_cast<std::uint64_t>(K) * K);
    return f;
}

CountingEstimates counting_estimates(int g, double h, int L) {
    if (g < 2) throw ParamError("counting estimates need g >= 2");
    if (!(h > 0.0 && h < 1.0)) throw ParamError("h must lie in (0, 1)");
    if (L < 1) throw ParamError("L must be >= 1");
    CountingEstimates est;
    est.loops = static_cast<int>(std::ceil(h * g));
    if (est.loops < 1) throw ParamError("ceil(h*g) must be >= 1");
    est.reduced_vertices = 2 * g - 2 - 2 * est.loops;
    if (est.reduced_vertices < 2)
        throw ParamError("reduced graph would drop below 2 vertices");
    est.reverse_count_bound = BigNat::pow(2, 3 * (g - est.loops) - 3);
    est.reduction_rounds_bound = 2;
    for (long long p = 1; p < L; p *= 2) ++est.reduction_rounds_bound;
    est.packing_threshold = (2 * g - 2) / (3 * (1 << (L - 1)));
    return est;
}

namespace {

struct Adjacency {
    std::vector<std::string> codes;             // sorted census order
    std::map<std::string, int> index;
    std::vector<std::vector<int>> nbr;
};

Adjacency census_adjacency(int V, int v_cap) {
    Adjacency adj;
    adj.codes = enumerate_census(V).codes;
    for (int i = 0; i < static_cast<int>(adj.codes.size()); ++i)
        adj.index[adj.codes[i]] = i;
    adj.nbr.resize(adj.codes.size());
    for (int i = 0; i < static_cast<int>(adj.codes.size()); ++i)
        for (const auto& code : neighbor_codes(adj.codes[i], v_cap))
            adj.nbr[i].push_back(adj.index.at(code));
    return adj;
}

std::vector<int> bfs_levels(const Adjacency& adj, const std::vector<int>& sources) {
    std::vector<int> dist(adj.codes.size(), -1);
    std::deque<int> frontier;
    for (int s : sources) {
        dist[s] = 0;
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        for (int nxt : adj.nbr[cur]) {
            if (dist[nxt] < 0) {
                dist[nxt] = dist[cur] + 1;
                frontier.push_back(nxt);
            }
        }
    }
    return dist;
}

} // namespace

SparsityReport sparsity_experiment(int g_min, int g_max, int L, double h,
                                   int trials, std::uint64_t seed, int v_cap) {
    if (g_min < 2 || g_max < g_min) throw ParamError("need 2 <= g_min <= g_max");
    if (L < 1) throw ParamError("L must be >= 1");
    if (!(h > 0.0 && h < 1.0)) throw ParamError("h must lie in (0, 1)");
    if (trials < 1) throw ParamError("trials must be >= 1");

    SparsityReport report{g_min, g_max, L, trials, h, seed, {}};
    SplitMix64 rng(seed);
    for (int g = g_min; g <= g_max; ++g) {
        const int V = 2 * g - 2;
        const int need = static_cast<int>(std::ceil(h * g));
        auto adj = census_adjacency(V, v_cap);

        GenusSparsity row;
        row.genus = g;
        row.vertices = V;
        row.census_count = static_cast<long long>(adj.codes.size());

        std::vector<int> bad;
        for (int i = 0; i < static_cast<int>(adj.codes.size()); ++i) {
            auto packing = disjoint_cycle_packing(graph_from_code(adj.codes[i]), L);
            row.packing_method = packing.method;
            if (static_cast<int>(packing.cycles.size()) >= need) bad.push_back(i);
        }
        row.badset_size = static_cast<long long>(bad.size());
        row.fraction = static_cast<double>(row.badset_size) /
                       static_cast<double>(row.census_count);
        row.empty_set_error = bad.empty() || row.badset_size == row.census_count;

        auto to_bad = bfs_levels(adj, bad);
        for (int i = 0; i < static_cast<int>(adj.codes.size()); ++i) {
            auto ecc = bfs_levels(adj, {i});
            for (int d : ecc) row.diameter = std::max(row.diameter, d);
        }

        for (int t = 0; t < trials; ++t) {
            auto sample = sample_uniform(V, rng.next());
            row.distances.push_back(to_bad[adj.index.at(canonical_code(sample))]);
        }
        auto sorted = row.distances;
        std::sort(sorted.begin(), sorted.end());
        row.median_distance = sorted[(sorted.size() - 1) / 2];
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string sparsity_csv(const SparsityReport& report) {
    std::string out = "g,badset_fraction,median_distance,diameter\n";
    for (const auto& row : report.rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%d,%.6f,%d,%d\n", row.genus, row.fraction,
                      row.median_distance, row.diameter);
        out += line;
    }
    return out;
}

} // namespace atlas
