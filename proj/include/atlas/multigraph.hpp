#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atlas/errors.hpp"

namespace atlas {

// Canonical form of a connected cubic multigraph: "V|u1-v1;u2-v2;..." with
// each edge written u<=v, edges sorted, vertex labels chosen to minimize the
// whole edge sequence over all relabelings. Equal codes <=> isomorphic.
using CanonicalCode = std::string;

// Connected cubic multigraph in half-edge form. Vertex v owns half-edges
// 3v, 3v+1, 3v+2; `pairing` is a fixed-point-free involution on half-edge
// ids. Loops pair two half-edges of the same vertex, parallel edges are
// distinct pairs joining the same vertices. Immutable once constructed;
// construction validates degree, the involution and connectivity.
class CubicMultigraph {
public:
    struct Edge {
        int id;   // position in half-edge-sorted edge list
        int h1;   // smaller half-edge id
        int h2;   // its mate
        int u;    // owner(h1) <= owner(h2) not guaranteed; u = owner(h1)
        int v;    // owner(h2)
        bool loop;
    };

    static CubicMultigraph from_pairing(int vertex_count, std::vector<int> pairing);

    int vertex_count() const { return vertex_count_; }
    const std::vector<int>& owner() const { return owner_; }
    const std::vector<int>& pairing() const { return pairing_; }

    int owner_of(int h) const { return owner_[h]; }
    int mate(int h) const { return pairing_[h]; }
    int half_edge_count() const { return vertex_count_ * 3; }
    int edge_count() const { return vertex_count_ * 3 / 2; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const;
    int edge_of_half(int h) const { return edge_of_half_[h]; }

    // Unordered pairs (u,v) with u <= v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

private:
    CubicMultigraph() = default;

    int vertex_count_ = 0;
    std::vector<int> owner_;
    std::vector<int> pairing_;
    std::vector<Edge> edges_;
    std::vector<int> edge_of_half_;
};

// Vertex-disjoint short cycles. `cycles` is the reported packing (exact
// maximum when the exact search ran, greedy otherwise); each cycle is a list
// of edge ids in traversal order. Loops are length-1 cycles, parallel pairs
// length-2 cycles.
struct CyclePacking {
    std::vector<std::vector<int>> cycles;
    int max_length = 0;
    std::string method;                          // "exact" or "greedy"
    std::vector<std::vector<int>> greedy_cycles; // always populated
};

CubicMultigraph from_edge_list(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges);

int girth(const CubicMultigraph& g);

CanonicalCode canonical_code(const CubicMultigraph& g);
CubicMultigraph graph_from_code(const CanonicalCode& code);

std::vector<int> bfs_distances(const CubicMultigraph& g, int v);
std::vector<std::vector<int>> all_pairs_distances(const CubicMultigraph& g);

std::vector<int> distance_coloring(const CubicMultigraph& g, int n);

std::vector<std::vector<int>> pants_disjoint_edge_partition(const CubicMultigraph& g);

CyclePacking disjoint_cycle_packing(const CubicMultigraph& g, int L);

// All simple edge-cycles with at most max_len edges, each in traversal order
// starting at the cycle's smallest vertex, first edge id < last edge id for
// lengths >= 2. Sorted by (length, sorted edge ids).
std::vector<std::vector<int>> simple_cycles_up_to(const CubicMultigraph& g, int max_len);

// Vertices of a cycle given as edge ids (sorted, deduplicated).
std::vector<int> cycle_vertices(const CubicMultigraph& g, const std::vector<int>& cycle);

std::string to_cmg(const CubicMultigraph& g);
CubicMultigraph from_cmg(const std::string& text);

} // namespace atlas
