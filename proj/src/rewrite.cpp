#include "atlas/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "atlas/errors.hpp"
#include "json.hpp"

namespace atlas {

namespace {

// Rebuild a graph from a modified ownership table: each vertex's half-edges
// are renumbered ascending by old id, the pairing is carried over, and the
// edge map is read off the surviving half-edge pairs.
RewriteStep rebuild(const CubicMultigraph& src, const std::vector<int>& owner) {
    const int V = src.vertex_count();
    const int H = src.half_edge_count();
    std::vector<int> next(V, 0), new_id(H, -1);
    for (int h = 0; h < H; ++h) new_id[h] = 3 * owner[h] + next[owner[h]]++;
    std::vector<int> pairing(H);
    for (int h = 0; h < H; ++h) pairing[new_id[h]] = new_id[src.pairing()[h]];

    RewriteStep step{CubicMultigraph::from_pairing(V, std::move(pairing)), {}};
    step.edge_map.reserve(src.edge_count());
    for (const auto& e : src.edges())
        step.edge_map.push_back(step.graph.edge_of_half(new_id[e.h1]));
    return step;
}

struct MoveEnds {
    int hu, hv;          // halves of the retained edge at u and v
    int a1, a2, b1, b2;  // the other halves, ordered by id
};

MoveEnds move_ends(const CubicMultigraph& g, int edge) {
    const auto& e = g.edge(edge);
    if (e.loop) throw LoopMoveError("cannot move on a loop edge");
    MoveEnds m{};
    m.hu = e.h1;
    m.hv = e.h2;
    int u = e.u, v = e.v;
    std::vector<int> a, b;
    for (int k = 0; k < 3; ++k) {
        if (3 * u + k != m.hu) a.push_back(3 * u + k);
        if (3 * v + k != m.hv) b.push_back(3 * v + k);
    }
    m.a1 = a[0];
    m.a2 = a[1];
    m.b1 = b[0];
    m.b2 = b[1];
    return m;
}

void apply_on_owner(std::vector<int>& owner, const CubicMultigraph& g, const Move& mv) {
    auto m = move_ends(g, mv.edge);
    const auto& e = g.edge(mv.edge);
    owner[m.a2] = e.v;
    owner[mv.variant == MoveVariant::A ? m.b1 : m.b2] = e.u;
}

} // namespace

RewriteStep whitehead_mapped(const CubicMultigraph& g, int edge, MoveVariant variant) {
    auto owner = g.owner();
    apply_on_owner(owner, g, {edge, variant});
    return rebuild(g, owner);
}

CubicMultigraph whitehead(const CubicMultigraph& g, int edge, MoveVariant variant) {
    return whitehead_mapped(g, edge, variant).graph;
}

RewriteStep apply_moveset_mapped(const CubicMultigraph& g, const MoveSet& ms) {
    if (ms.moves.empty()) throw ParamError("move set must be non-empty");
    std::set<int> touched;
    for (const auto& mv : ms.moves) {
        const auto& e = g.edge(mv.edge);
        if (e.loop) throw LoopMoveError("cannot move on a loop edge");
        if (!touched.insert(e.u).second || !touched.insert(e.v).second)
            throw OverlapError("move edges must be pairwise vertex-disjoint");
    }
    auto owner = g.owner();
    for (const auto& mv : ms.moves) apply_on_owner(owner, g, mv);
    return rebuild(g, owner);
}

CubicMultigraph apply_moveset(const CubicMultigraph& g, const MoveSet& ms) {
    return apply_moveset_mapped(g, ms).graph;
}

// ---- girth lifting ----

namespace {

// gadget wiring: octagon vertex i joins segment vertex sigma(i)
constexpr int kGadgetPairing[8] = {1, 4, 7, 2, 5, 8, 3, 6};

} // namespace

CubicMultigraph insert_girth_gadget(const CubicMultigraph& g, int edge) {
    const auto& e = g.edge(edge);
    const int V = g.vertex_count();
    auto seg = [V](int j) { return V + j - 1; };     // S1..S8
    auto oct = [V](int i) { return V + 8 + i - 1; }; // H1..H8

    std::vector<std::pair<int, int>> edges;
    for (const auto& f : g.edges())
        if (f.id != edge) edges.emplace_back(f.u, f.v);
    edges.emplace_back(e.u, seg(1));
    for (int j = 1; j < 8; ++j) edges.emplace_back(seg(j), seg(j + 1));
    edges.emplace_back(seg(8), e.v);
    for (int i = 1; i <= 8; ++i) edges.emplace_back(oct(i), oct(i % 8 + 1));
    for (int i = 1; i <= 8; ++i) edges.emplace_back(oct(i), seg(kGadgetPairing[i - 1]));
    return from_edge_list(V + 16, edges);
}

LiftResult girth_lift(const CubicMultigraph& g) {
    const int cap = 10 * g.edge_count();
    LiftResult out{g, {}, 0};
    while (girth(out.graph) < 6) {
        if (out.gadgets >= cap)
            throw NonTerminationError("girth lifting exceeded its insertion cap");
        int target = girth(out.graph);
        auto cycles = simple_cycles_up_to(out.graph, target);
        // sorted by (length, sorted edge ids): the front is the least
        // shortest cycle, and its least edge is the subdivision target
        const auto& cyc = cycles.front();
        int edge = *std::min_element(cyc.begin(), cyc.end());
        out.graph = insert_girth_gadget(out.graph, edge);
        ++out.gadgets;
    }

    out.corr.forward.resize(g.vertex_count());
    std::iota(out.corr.forward.begin(), out.corr.forward.end(), 0);
    auto src = all_pairs_distances(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dst = bfs_distances(out.graph, out.corr.forward[u]);
        for (int w = u + 1; w < g.vertex_count(); ++w) {
            double d = src[u][w];
            double dp = dst[out.corr.forward[w]];
            out.corr.a = std::max({out.corr.a, dp / d, d / dp});
            out.corr.b = std::max(out.corr.b, std::abs(dp - d));
        }
    }
    return out;
}

// ---- cycle reduction ----

namespace {

// Orders the cycle's vertices so edge i joins verts[i] to verts[i+1];
// throws unless the edges form a simple cycle of length >= 2.
std::vector<int> cycle_walk(const CubicMultigraph& g, const std::vector<int>& cycle) {
    const int L = static_cast<int>(cycle.size());
    if (L < 2) throw InvalidCycleError("cycle must have length >= 2");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != L)
        throw InvalidCycleError("cycle edges must be distinct");
    for (int id : cycle) {
        if (id < 0 || id >= g.edge_count()) throw InvalidCycleError("edge id out of range");
        if (g.edge(id).loop) throw InvalidCycleError("loops are length-1 cycles");
    }
    const auto& e0 = g.edge(cycle[0]);
    if (L == 2) {
        const auto& e1 = g.edge(cycle[1]);
        bool parallel = (e0.u == e1.u && e0.v == e1.v) || (e0.u == e1.v && e0.v == e1.u);
        if (!parallel) throw InvalidCycleError("length-2 cycle needs a parallel pair");
        return {e0.u, e0.v};
    }
    const auto& e1 = g.edge(cycle[1]);
    int v1;
    if (e0.u == e1.u || e0.u == e1.v) v1 = e0.u;
    else if (e0.v == e1.u || e0.v == e1.v) v1 = e0.v;
    else throw InvalidCycleError("consecutive cycle edges must share a vertex");
    std::vector<int> verts{e0.u == v1 ? e0.v : e0.u};
    int cur = v1;
    for (int i = 1; i < L; ++i) {
        verts.push_back(cur);
        const auto& e = g.edge(cycle[i]);
        if (e.u == cur) cur = e.v;
        else if (e.v == cur) cur = e.u;
        else throw InvalidCycleError("cycle edges do not form a closed walk");
    }
    if (cur != verts[0]) throw InvalidCycleError("cycle edges do not close up");
    std::set<int> seen(verts.begin(), verts.end());
    if (seen.size() != verts.size())
        throw InvalidCycleError("cycle revisits a vertex; not simple");
    return verts;
}

int half_at(const CubicMultigraph& g, int edge, int vertex) {
    const auto& e = g.edge(edge);
    return e.u == vertex ? e.h1 : e.h2;
}

} // namespace

ReduceResult reduce_cycle_to_loop(const CubicMultigraph& g, const std::vector<int>& cycle) {
    cycle_walk(g, cycle); // reject bad input up front; loops and short lists never reach the rounds
    ReduceResult out{g, {}, -1};
    std::vector<int> cyc = cycle;
    while (cyc.size() >= 2) {
        auto verts = cycle_walk(out.graph, cyc); // re-validated every round
        const int L = static_cast<int>(cyc.size());
        const int k = L == 2 ? 1 : (L - 1) / 2;

        MoveSet ms;
        std::vector<char> selected(L, 0);
        for (int j = 0; j < k; ++j) {
            int i = 2 * j;
            selected[i] = 1;
            int u = verts[i], v = verts[(i + 1) % L];
            int h_prev = half_at(out.graph, cyc[(i + L - 1) % L], u);
            int h_next = half_at(out.graph, cyc[(i + 1) % L], v);
            auto m = move_ends(out.graph, cyc[i]);
            // shorten: regroup the incoming and outgoing strands onto one
            // endpoint of the retained edge; the walk may traverse the edge
            // against its stored orientation, so test both pairings
            bool a_side = (h_prev == m.a1 && h_next == m.b1) ||
                          (h_prev == m.a2 && h_next == m.b2) ||
                          (h_next == m.a1 && h_prev == m.b1) ||
                          (h_next == m.a2 && h_prev == m.b2);
            ms.moves.push_back({cyc[i], a_side ? MoveVariant::A : MoveVariant::B});
        }

        auto step = apply_moveset_mapped(out.graph, ms);
        std::vector<int> next_cyc;
        for (int i = 0; i < L; ++i)
            if (!selected[i]) next_cyc.push_back(step.edge_map[cyc[i]]);
        out.rounds.push_back(std::move(ms));
        out.graph = std::move(step.graph);
        cyc = std::move(next_cyc);
        if (L >= 3 && static_cast<int>(cyc.size()) != L / 2 + 1)
            throw InvalidCycleError("internal: round missed its target length");
    }
    out.loop_edge = cyc.at(0);
    if (!out.graph.edge(out.loop_edge).loop)
        throw InvalidCycleError("internal: reduction did not end in a loop");
    return out;
}

std::string trace_json(const std::vector<MoveSet>& rounds) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& ms : rounds) {
        nlohmann::json round = nlohmann::json::array();
        for (const auto& mv : ms.moves)
            round.push_back({{"edge", mv.edge},
                             {"variant", mv.variant == MoveVariant::A ? "A" : "B"}});
        arr.push_back(std::move(round));
    }
    return arr.dump();
}

// ---- loop gadgets ----

CubicMultigraph add_loop_gadget(const CubicMultigraph& g, int edge) {
    const auto& e = g.edge(edge);
    const int V = g.vertex_count();
    const int y = V, z = V + 1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& f : g.edges())
        if (f.id != edge) edges.emplace_back(f.u, f.v);
    edges.emplace_back(e.u, y);
    edges.emplace_back(y, e.v);
    edges.emplace_back(y, z);
    edges.emplace_back(z, z);
    return from_edge_list(V + 2, edges);
}

CubicMultigraph remove_loop_gadgets(const CubicMultigraph& g, const std::vector<int>& loops) {
    if (loops.empty()) throw ParamError("need at least one loop to remove");
    std::set<int> loop_ids(loops.begin(), loops.end());
    if (loop_ids.size() != loops.size()) throw GadgetError("duplicate loop in removal set");
    std::set<int> loop_vertices_all; // every loop vertex of g, removed or not
    for (const auto& e : g.edges())
        if (e.loop) loop_vertices_all.insert(e.u);

    const int H = g.half_edge_count();
    std::vector<char> dead_half(H, 0), dead_vertex(g.vertex_count(), 0);
    std::vector<int> pairing = g.pairing();
    std::vector<int> smooth; // the degree-2 vertices left behind
    std::set<int> attach_seen;

    for (int id : loops) {
        const auto& e = g.edge(id);
        if (!e.loop) throw GadgetError("edge in removal set is not a loop");
        int w = e.u;
        int third = -1;
        for (int k = 0; k < 3; ++k)
            if (3 * w + k != e.h1 && 3 * w + k != e.h2) third = 3 * w + k;
        int x = g.owner_of(g.mate(third));
        if (loop_vertices_all.count(x))
            throw GadgetError("loop attaches to another loop vertex");
        if (!attach_seen.insert(x).second)
            throw GadgetError("two removed loops attach through the same vertex");
        dead_vertex[w] = 1;
        for (int k = 0; k < 3; ++k) dead_half[3 * w + k] = 1;
        dead_half[g.mate(third)] = 1; // x's side of the attaching edge
        dead_vertex[x] = 1;
        smooth.push_back(x);
    }

    // splice each smoothed vertex out of the pairing
    for (int x : smooth) {
        std::vector<int> live;
        for (int k = 0; k < 3; ++k)
            if (!dead_half[3 * x + k]) live.push_back(3 * x + k);
        int ha = live.at(0), hb = live.at(1);
        int ma = pairing[ha], mb = pairing[hb];
        if (ma == hb)
            throw GadgetError("smoothing closed a free circle");
        pairing[ma] = mb;
        pairing[mb] = ma;
        dead_half[ha] = 1;
        dead_half[hb] = 1;
    }

    const int V_new = g.vertex_count() - 2 * static_cast<int>(loops.size());
    if (V_new < 2) throw GadgetError("removal would leave fewer than 2 vertices");

    std::vector<int> new_vertex(g.vertex_count(), -1), new_half(H, -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead_vertex[v]) new_vertex[v] = nv++;
    int nh = 0;
    for (int h = 0; h < H; ++h)
        if (!dead_half[h]) new_half[h] = nh++;
    std::vector<int> np(3 * V_new, -1);
    for (int h = 0; h < H; ++h)
        if (!dead_half[h]) np[new_half[h]] = new_half[pairing[h]];
    try {
        return CubicMultigraph::from_pairing(V_new, std::move(np));
    } catch (const DisconnectedError&) {
        throw GadgetError("removal disconnects the graph");
    }
}

} // namespace atlas
