#include "atlas/multigraph.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>

namespace atlas {

// ---- construction ----

CubicMultigraph CubicMultigraph::from_pairing(int vertex_count, std::vector<int> pairing) {
    if (vertex_count < 2 || vertex_count % 2 != 0)
        throw ParamError("vertex count must be an even integer >= 2");
    const int H = 3 * vertex_count;
    if (static_cast<int>(pairing.size()) != H)
        throw FormatError("pairing must cover exactly 3V half-edges");
    for (int h = 0; h < H; ++h) {
        int m = pairing[h];
        if (m < 0 || m >= H) throw FormatError("pairing target out of range");
        if (m == h) throw FormatError("pairing must be fixed-point-free");
        if (pairing[m] != h) throw FormatError("pairing must be an involution");
    }

    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3; ++k) {
            int w = pairing[3 * u + k] / 3;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != vertex_count) throw DisconnectedError("graph is not connected");

    CubicMultigraph g;
    g.vertex_count_ = vertex_count;
    g.pairing_ = std::move(pairing);
    g.owner_.resize(H);
    for (int h = 0; h < H; ++h) g.owner_[h] = h / 3;
    g.edge_of_half_.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        if (h < g.pairing_[h]) {
            Edge e;
            e.id = static_cast<int>(g.edges_.size());
            e.h1 = h;
            e.h2 = g.pairing_[h];
            e.u = h / 3;
            e.v = e.h2 / 3;
            e.loop = (e.u == e.v);
            g.edge_of_half_[e.h1] = e.id;
            g.edge_of_half_[e.h2] = e.id;
            g.edges_.push_back(e);
        }
    }
    return g;
}

const CubicMultigraph::Edge& CubicMultigraph::edge(int id) const {
    if (id < 0 || id >= static_cast<int>(edges_.size()))
        throw IndexError("edge id out of range");
    return edges_[id];
}

std::vector<std::pair<int, int>> CubicMultigraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

CubicMultigraph from_edge_list(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 2 || vertex_count % 2 != 0)
        throw DegreeError("cubic graphs need an even vertex count >= 2");
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw IndexError("edge endpoint out of range");
    }
    if (static_cast<int>(edges.size()) != vertex_count * 3 / 2)
        throw DegreeError("edge count must be 3V/2 for a cubic graph");

    // Deterministic half-edge assignment: edges in input order, half-edges
    // within a vertex in order of incident-edge appearance.
    std::vector<int> next_slot(vertex_count, 0);
    std::vector<int> pairing(3 * vertex_count, -1);
    auto take = [&](int v) {
        if (next_slot[v] == 3) throw DegreeError("vertex degree exceeds 3");
        return 3 * v + next_slot[v]++;
    };
    for (const auto& [u, v] : edges) {
        int h1 = take(u);
        int h2 = take(v);
        pairing[h1] = h2;
        pairing[h2] = h1;
    }
    return CubicMultigraph::from_pairing(vertex_count, std::move(pairing));
}

// ---- girth ----
//
// One BFS per start vertex; a non-tree edge (u,w) seen while scanning u
// yields the candidate dist[u]+dist[w]+1. Skipping only the incoming edge id
// (not the parent vertex) makes parallel edges close length-2 cycles, and a
// loop scanned at its own vertex closes length 1. Candidates never
// undercount a cycle, and for every shortest cycle the BFS from one of its
// vertices meets it exactly.

int girth(const CubicMultigraph& g) {
    const int V = g.vertex_count();
    int best = INT_MAX;
    std::vector<int> dist(V), in_edge(V), queue;
    queue.reserve(V);
    for (int s = 0; s < V && best > 1; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(in_edge.begin(), in_edge.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (2 * dist[u] >= best) break;
            for (int k = 0; k < 3; ++k) {
                int h = 3 * u + k;
                int e = g.edge_of_half(h);
                if (e == in_edge[u]) continue;
                int w = g.owner_of(g.mate(h));
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    in_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

// ---- BFS ----

std::vector<int> bfs_distances(const CubicMultigraph& g, int v) {
    const int V = g.vertex_count();
    if (v < 0 || v >= V) throw IndexError("start vertex out of range");
    std::vector<int> dist(V, -1), queue;
    queue.reserve(V);
    dist[v] = 0;
    queue.push_back(v);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int k = 0; k < 3; ++k) {
            int w = g.owner_of(g.mate(3 * u + k));
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const CubicMultigraph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

// ---- canonical code ----
//
// The contract is brute force: minimize the sorted edge-pair sequence over
// all V! relabelings. The search below builds the relabeling one new label
// at a time and compares the already-determined prefix of the edge sequence
// against the best complete sequence so far, cutting any branch that is
// already larger. Rows: entry v in row u stands for the pair (u,v), u <= v;
// row u only ever grows with larger values, and the flat sequence
// row0|row1|... is exactly the sorted pair list, so the prefix up to the
// first incomplete row is final and comparable.

namespace {

struct LexMinSearch {
    int V;
    int E;
    std::vector<std::vector<int>> nbr; // non-loop incident edges, one entry per edge
    std::vector<int> loops;            // loop count per vertex

    std::vector<int> label;  // old vertex -> new label, -1 while unset
    std::vector<int> order;  // new label -> old vertex
    std::vector<std::vector<int>> rows;
    std::vector<int> und;    // incident non-loop edges with unlabeled far end
    std::vector<std::pair<int, int>> best;

    explicit LexMinSearch(const CubicMultigraph& g)
        : V(g.vertex_count()),
          E(g.edge_count()),
          nbr(V),
          loops(V, 0),
          label(V, -1),
          rows(V),
          und(V, 0) {
        for (const auto& e : g.edges()) {
            if (e.loop) {
                ++loops[e.u];
            } else {
                nbr[e.u].push_back(e.v);
                nbr[e.v].push_back(e.u);
                ++und[e.u];
                ++und[e.v];
            }
        }
    }

    void assign(int x, int k) {
        label[x] = k;
        order.push_back(x);
        for (int i = 0; i < loops[x]; ++i) rows[k].push_back(k);
        for (int y : nbr[x]) {
            --und[x];
            if (label[y] >= 0) {
                rows[label[y]].push_back(k);
                --und[y];
            } else {
                ++und[x]; // only edges to labeled ends settle now
            }
        }
    }

    void unassign(int x) {
        int k = label[x];
        for (int y : nbr[x]) {
            if (label[y] >= 0) { // labels are unique, so this means y was labeled before x
                rows[label[y]].pop_back();
                ++und[y];
                ++und[x];
            }
        }
        rows[k].clear();
        label[x] = -1;
        order.pop_back();
    }

    // -1: prefix strictly smaller than best; 0: equal so far; +1: larger.
    int compare_prefix() const {
        std::size_t bi = 0;
        int assigned = static_cast<int>(order.size());
        for (int j = 0; j < assigned; ++j) {
            for (int v : rows[j]) {
                std::pair<int, int> p{j, v};
                if (p < best[bi]) return -1;
                if (best[bi] < p) return 1;
                ++bi;
            }
            if (und[order[j]] != 0) return 0; // row j still open
        }
        return 0;
    }

    std::vector<std::pair<int, int>> flatten() const {
        std::vector<std::pair<int, int>> seq;
        seq.reserve(E);
        for (int j = 0; j < V; ++j)
            for (int v : rows[j]) seq.emplace_back(j, v);
        return seq;
    }

    // The next label must land on a neighbor of the first vertex whose row
    // is still open: that row's next entry is the next position of the flat
    // sequence, everything before it is already fixed, and only a neighbor
    // can fill it with the new (smallest remaining) label. Any other choice
    // leaves a strictly larger value there, so restricting candidates this
    // way loses no minimal completion. Only label 0 ranges over everything.
    // Order within the candidate set is a pure heuristic; correctness comes
    // from exhausting every unpruned branch.
    std::vector<int> candidates() const {
        std::vector<int> pool;
        int open = -1;
        for (int x : order)
            if (und[x] != 0) { open = x; break; }
        if (open >= 0) {
            for (int y : nbr[open])
                if (label[y] < 0) pool.push_back(y);
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        } else if (order.empty()) {
            for (int x = 0; x < V; ++x) pool.push_back(x);
        }
        // open == -1 with a non-empty partial labeling means the labeled set
        // is closed; connectivity then forces it to be all of V already.
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int x : pool) {
            std::vector<int> key;
            for (int y : nbr[x])
                if (label[y] >= 0) key.push_back(label[y]);
            std::sort(key.begin(), key.end());
            while (key.size() < 3) key.push_back(INT_MAX);
            key.push_back(2 - loops[x]);
            key.push_back(x);
            keyed.emplace_back(std::move(key), x);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> out;
        out.reserve(keyed.size());
        for (auto& [k, x] : keyed) out.push_back(x);
        return out;
    }

    void dfs() {
        int k = static_cast<int>(order.size());
        if (k == V) {
            auto seq = flatten();
            if (best.empty() || seq < best) best = std::move(seq);
            return;
        }
        for (int x : candidates()) {
            assign(x, k);
            if (best.empty() || compare_prefix() <= 0) dfs();
            unassign(x);
        }
    }
};

} // namespace

CanonicalCode canonical_code(const CubicMultigraph& g) {
    LexMinSearch search(g);
    search.dfs();
    std::string code = std::to_string(g.vertex_count());
    code += '|';
    for (std::size_t i = 0; i < search.best.size(); ++i) {
        if (i) code += ';';
        code += std::to_string(search.best[i].first);
        code += '-';
        code += std::to_string(search.best[i].second);
    }
    return code;
}

namespace {

int parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw FormatError("expected integer in code");
    return std::stoi(s.substr(start, pos - start));
}

} // namespace

CubicMultigraph graph_from_code(const CanonicalCode& code) {
    std::size_t pos = 0;
    int V = parse_int(code, pos);
    if (pos >= code.size() || code[pos] != '|') throw FormatError("missing '|' in code");
    ++pos;
    std::vector<std::pair<int, int>> edges;
    while (pos < code.size()) {
        int u = parse_int(code, pos);
        if (pos >= code.size() || code[pos] != '-') throw FormatError("missing '-' in code");
        ++pos;
        int v = parse_int(code, pos);
        edges.emplace_back(u, v);
        if (pos < code.size()) {
            if (code[pos] != ';') throw FormatError("missing ';' in code");
            ++pos;
        }
    }
    return from_edge_list(V, edges);
}

// ---- short cycle enumeration ----

namespace {

struct CycleDfs {
    const CubicMultigraph& g;
    int max_len;
    int root = 0;
    std::vector<char> on_path;
    std::vector<int> path_edges;
    std::vector<std::vector<int>>& out;

    CycleDfs(const CubicMultigraph& g_, int max_len_, std::vector<std::vector<int>>& out_)
        : g(g_), max_len(max_len_), on_path(g_.vertex_count(), 0), out(out_) {}

    void run(int cur) {
        for (int k = 0; k < 3; ++k) {
            int h = 3 * cur + k;
            int e = g.edge_of_half(h);
            if (!path_edges.empty() && e == path_edges.back()) continue;
            int w = g.owner_of(g.mate(h));
            if (w == cur) continue; // loops handled separately
            if (w == root) {
                if (!path_edges.empty() && path_edges.front() < e) {
                    auto cycle = path_edges;
                    cycle.push_back(e);
                    out.push_back(std::move(cycle));
                }
            } else if (!on_path[w] && w > root &&
                       static_cast<int>(path_edges.size()) + 2 <= max_len) {
                on_path[w] = 1;
                path_edges.push_back(e);
                run(w);
                path_edges.pop_back();
                on_path[w] = 0;
            }
        }
    }
};

std::vector<int> sorted_copy(const std::vector<int>& v) {
    auto s = v;
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

std::vector<std::vector<int>> simple_cycles_up_to(const CubicMultigraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    if (max_len < 1) return out;
    for (const auto& e : g.edges())
        if (e.loop) out.push_back({e.id});
    if (max_len >= 2) {
        CycleDfs dfs(g, max_len, out);
        for (int r = 0; r < g.vertex_count(); ++r) {
            dfs.root = r;
            dfs.on_path[r] = 1;
            dfs.run(r);
            dfs.on_path[r] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return sorted_copy(a) < sorted_copy(b);
    });
    return out;
}

std::vector<int> cycle_vertices(const CubicMultigraph& g, const std::vector<int>& cycle) {
    std::vector<int> vs;
    for (int eid : cycle) {
        const auto& e = g.edge(eid);
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// ---- distance coloring ----

std::vector<int> distance_coloring(const CubicMultigraph& g, int n) {
    if (n < 2) throw ParamError("distance coloring needs n >= 2");
    const int V = g.vertex_count();
    auto dist = all_pairs_distances(g);
    std::vector<int> color(V, -1);
    for (int v = 0; v < V; ++v) {
        std::vector<char> used(V + 1, 0);
        for (int u = 0; u < v; ++u)
            if (dist[u][v] < n) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

// ---- edge partition ----

std::vector<std::vector<int>> pants_disjoint_edge_partition(const CubicMultigraph& g) {
    const auto& edges = g.edges();
    auto conflicts = [&](const CubicMultigraph::Edge& a, const CubicMultigraph::Edge& b) {
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    };
    std::vector<std::vector<int>> classes;
    for (const auto& e : edges) {
        bool placed = false;
        for (auto& cls : classes) {
            bool ok = true;
            for (int other : cls)
                if (conflicts(e, edges[other])) { ok = false; break; }
            if (ok) {
                cls.push_back(e.id);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({e.id});
    }
    return classes;
}

// ---- disjoint cycle packing ----

namespace {

// Exact maximum independent set over the cycle conflict graph, memoized on
// the available-vertex mask (the reason for the V <= 10 exactness cutoff:
// the mask fits comfortably and the state space stays tiny).
struct ExactPacking {
    const std::vector<std::uint64_t>& masks;
    int n;
    std::vector<std::vector<std::pair<std::uint64_t, int>>> memo;

    ExactPacking(const std::vector<std::uint64_t>& masks_)
        : masks(masks_), n(static_cast<int>(masks_.size())), memo(n + 1) {}

    int solve(int i, std::uint64_t avail) {
        if (i == n) return 0;
        for (auto& [m, r] : memo[i])
            if (m == avail) return r;
        int r = solve(i + 1, avail);
        if ((masks[i] & ~avail) == 0)
            r = std::max(r, 1 + solve(i + 1, avail & ~masks[i]));
        memo[i].emplace_back(avail, r);
        return r;
    }

    std::vector<int> reconstruct(std::uint64_t avail) {
        std::vector<int> sel;
        for (int i = 0; i < n; ++i) {
            if ((masks[i] & ~avail) == 0 &&
                1 + solve(i + 1, avail & ~masks[i]) == solve(i, avail)) {
                sel.push_back(i);
                avail &= ~masks[i];
            }
        }
        return sel;
    }
};

// Maximum set of vertices pairwise at distance >= spacing; exact for the
// sizes in scope, first-fit order greedy as a fallback on big inputs.
std::vector<int> max_spaced_set(const std::vector<std::vector<int>>& dist, int spacing) {
    const int V = static_cast<int>(dist.size());
    auto far_from_all = [&](int v, const std::vector<int>& set) {
        for (int u : set)
            if (dist[u][v] < spacing) return false;
        return true;
    };
    if (V > 24) {
        std::vector<int> greedy;
        for (int v = 0; v < V; ++v)
            if (far_from_all(v, greedy)) greedy.push_back(v);
        return greedy;
    }
    std::vector<int> best, cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(cur.size()) + (V - v) <= static_cast<int>(best.size())) return;
        if (v == V) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (far_from_all(v, cur)) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    return best;
}

} // namespace

CyclePacking disjoint_cycle_packing(const CubicMultigraph& g, int L) {
    if (L < 1) throw ParamError("cycle packing needs L >= 1");
    const int V = g.vertex_count();
    auto cycles = simple_cycles_up_to(g, L);
    std::vector<std::vector<int>> cyc_vertices;
    cyc_vertices.reserve(cycles.size());
    for (const auto& c : cycles) cyc_vertices.push_back(cycle_vertices(g, c));

    auto disjoint_from = [&](std::size_t ci, const std::vector<char>& used) {
        for (int v : cyc_vertices[ci])
            if (used[v]) return false;
        return true;
    };

    CyclePacking out;
    out.max_length = L;

    // Greedy: a maximum (2L+1)-spaced vertex set guarantees the L-balls are
    // disjoint, take the least short cycle inside each, then complete to a
    // maximal-by-inclusion packing.
    auto dist = all_pairs_distances(g);
    auto spaced = max_spaced_set(dist, 2 * L + 1);
    std::vector<char> used(V, 0);
    for (int s : spaced) {
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            bool local = true;
            for (int v : cyc_vertices[ci])
                if (dist[s][v] > L) { local = false; break; }
            if (local && disjoint_from(ci, used)) {
                out.greedy_cycles.push_back(cycles[ci]);
                for (int v : cyc_vertices[ci]) used[v] = 1;
                break;
            }
        }
    }
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        if (disjoint_from(ci, used)) {
            out.greedy_cycles.push_back(cycles[ci]);
            for (int v : cyc_vertices[ci]) used[v] = 1;
        }
    }

    if (V <= 10) {
        std::vector<std::uint64_t> masks;
        masks.reserve(cycles.size());
        for (const auto& vs : cyc_vertices) {
            std::uint64_t m = 0;
            for (int v : vs) m |= std::uint64_t{1} << v;
            masks.push_back(m);
        }
        ExactPacking exact(masks);
        std::uint64_t all = (V == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << V) - 1;
        for (int i : exact.reconstruct(all)) out.cycles.push_back(cycles[i]);
        out.method = "exact";
    } else {
        out.cycles = out.greedy_cycles;
        out.method = "greedy";
    }
    return out;
}

// ---- cmg text format ----

std::string to_cmg(const CubicMultigraph& g) {
    std::string s = "cmg1\nv " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edge_list())
        s += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

CubicMultigraph from_cmg(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty() || lines[0] != "cmg1") throw FormatError("missing cmg1 header");
    if (lines.size() < 2 || lines[1].rfind("v ", 0) != 0)
        throw FormatError("missing vertex count line");
    int V = 0;
    try {
        std::size_t used = 0;
        V = std::stoi(lines[1].substr(2), &used);
        if (used != lines[1].size() - 2) throw FormatError("malformed vertex count");
    } catch (const FormatError&) {
        throw;
    } catch (...) {
        throw FormatError("malformed vertex count");
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break; // trailing newline
        std::size_t pos = 0;
        const std::string& ln = lines[i];
        if (ln.rfind("e ", 0) != 0) throw FormatError("malformed edge line");
        pos = 2;
        int u = parse_int(ln, pos);
        if (pos >= ln.size() || ln[pos] != ' ') throw FormatError("malformed edge line");
        ++pos;
        int v = parse_int(ln, pos);
        if (pos != ln.size()) throw FormatError("malformed edge line");
        edges.emplace_back(u, v);
    }
    return from_edge_list(V, edges);
}

} // namespace atlas
