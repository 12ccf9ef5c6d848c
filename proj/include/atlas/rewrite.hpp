#pragma once

#include <string>
#include <vector>

#include "atlas/multigraph.hpp"

namespace atlas {

enum class MoveVariant { A, B };

struct Move {
    int edge = -1;
    MoveVariant variant = MoveVariant::A;
};

// Simultaneously realizable moves: pairwise vertex-disjoint non-loop edges.
struct MoveSet {
    std::vector<Move> moves;
};

// A rewrite result together with the edge tracking needed to chain moves:
// every edge survives a move (only half-edge ownership changes), so the map
// is total from source edge ids to result edge ids.
struct RewriteStep {
    CubicMultigraph graph;
    std::vector<int> edge_map;
};

// Regroups the four half-edges around a retained non-loop edge e = (u, v).
// With u's other half-edges (a1, a2) and v's (b1, b2), each ordered by id,
// variant A leaves (a1, b1) on u and (a2, b2) on v; variant B leaves
// (a1, b2) on u and (a2, b1) on v.
RewriteStep whitehead_mapped(const CubicMultigraph& g, int edge, MoveVariant variant);
CubicMultigraph whitehead(const CubicMultigraph& g, int edge, MoveVariant variant);

// All moves at once; vertex-disjointness makes the order irrelevant.
RewriteStep apply_moveset_mapped(const CubicMultigraph& g, const MoveSet& ms);
CubicMultigraph apply_moveset(const CubicMultigraph& g, const MoveSet& ms);

struct Correspondence {
    std::vector<int> forward; // source vertex -> target vertex
    double a = 1.0;           // max multiplicative distance distortion
    double b = 0.0;           // max additive distance distortion
};

struct LiftResult {
    CubicMultigraph graph;
    Correspondence corr;
    int gadgets = 0;
};

// One gadget insertion: subdivide the edge into nine segments and wire the
// eight interior vertices to a fresh octagon.
CubicMultigraph insert_girth_gadget(const CubicMultigraph& g, int edge);

// Insert gadgets on the least edge of the least shortest cycle until the
// girth reaches 6. Source vertices keep their labels, so the forward map is
// the identity; (a, b) are measured over all source vertex pairs.
LiftResult girth_lift(const CubicMultigraph& g);

struct ReduceResult {
    CubicMultigraph graph;
    std::vector<MoveSet> rounds; // edge ids are relative to the round's input graph
    int loop_edge = -1;          // the loop the cycle collapsed to, in the final graph
};

// Drives a simple cycle of length L >= 2 down to a loop: each round moves on
// alternating cycle edges and shortens L to floor(L/2)+1 exactly (a final
// single-move round turns a length-2 cycle into a loop).
ReduceResult reduce_cycle_to_loop(const CubicMultigraph& g, const std::vector<int>& cycle);

std::string trace_json(const std::vector<MoveSet>& rounds);

// Subdivide the edge and hang a fresh loop vertex off the new midpoint;
// inverse of one remove_loop_gadgets step.
CubicMultigraph add_loop_gadget(const CubicMultigraph& g, int edge);

// Delete each loop, its vertex, and the attaching edge, then smooth the
// degree-2 vertices left behind. V drops by exactly 2 per loop.
CubicMultigraph remove_loop_gadgets(const CubicMultigraph& g, const std::vector<int>& loops);

} // namespace atlas
