#include "atlas/surfaces.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "atlas/errors.hpp"
#include "json.hpp"

namespace atlas {

namespace {

using nlohmann::json;

// Certificate inequalities are evaluated with this slack folded into the
// margin, so "margin > 0" is the single pass criterion everywhere. Tight
// cases (the system attains the bound exactly) then sit at +kCertSlack.
constexpr double kCertSlack = 1e-9;
// Consistency band for the arc bounds against the pentagon solution.
constexpr double kArcTolerance = 1e-6;

} // namespace

// ---- pants-decomposition coordinates ----

PantsSurface net_point(const CubicMultigraph& g) {
    PantsSurface s{g, {}, {}};
    s.lengths.assign(g.edge_list().size(), epsilon0());
    s.twists.assign(g.edge_list().size(), 0.0);
    return s;
}

bool in_length_band(const PantsSurface& s) {
    for (double l : s.lengths)
        if (!(l >= kLengthBandLow && l <= kLengthBandHigh)) return false;
    return true;
}

double net_crossing_bound() { return 2.0 * collar_width(epsilon0()); }

// ---- hairy torus grids ----

namespace {

GridFillingCertificate grid_filling(int m, int n) {
    GridFillingCertificate cert;
    // Grid torus: vertex (i, j) = j*m + i, horizontal edge (i, j) -> (i+1, j)
    // with id j*m + i, vertical edge (i, j) -> (i, j+1) with id m*n + j*m + i.
    int verts = m * n;
    cert.grid_edges = 2 * m * n;
    std::vector<char> covered(cert.grid_edges, 0);
    // The systoles project to the grid lines: n horizontal loops of m edges
    // and m vertical loops of n edges.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) covered[j * m + i] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) covered[m * n + j * m + i] = 1;
    cert.covered_edges = (int)std::count(covered.begin(), covered.end(), 1);
    cert.all_edges_covered = cert.covered_edges == cert.grid_edges;

    cert.all_quadrilateral = true;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            std::set<int> sides = {j * m + i,
                                   ((j + 1) % n) * m + i,
                                   m * n + j * m + i,
                                   m * n + j * m + (i + 1) % m};
            if (sides.size() != 4) cert.all_quadrilateral = false;
            ++cert.faces;
        }
    cert.euler = verts - cert.grid_edges + cert.faces;
    cert.pass = cert.all_edges_covered && cert.all_quadrilateral &&
                cert.euler == 0 && cert.faces == m * n;
    return cert;
}

} // namespace

HairyTorusModel build_hairy_torus(int m, int n) {
    if (m < 3 || n < 3)
        throw ParamError("hairy torus needs m, n >= 3");
    if ((m * n) % 2 != 0)
        throw ParamError("hairy torus needs an even number of squares");
    HairyTorusModel model;
    model.m = m;
    model.n = n;
    model.square = square_data();
    model.genus = (m * n + 2) / 2;
    model.singular_count = m * n;
    model.systole_length = model.square.systole_length;
    model.bers_lower_bound = 2.0 * model.square.t * std::min(m, n);
    assert(model.singular_count == 2 * model.genus - 2);
    return model;
}

HairyTorusReport hairy_torus_report(int m, int n) {
    HairyTorusReport rep;
    rep.model = build_hairy_torus(m, n);
    rep.two_sqrt_genus = 2.0 * std::sqrt((double)rep.model.genus);
    rep.bers_exceeds_2sqrt_g = rep.model.bers_lower_bound > rep.two_sqrt_genus;
    rep.wrap_bound = 2.0 * rep.model.square.t * std::min(m, n);
    rep.pair_systole_certified = rep.wrap_bound >= rep.model.systole_length;
    rep.filling = grid_filling(m, n);
    return rep;
}

// ---- pentagon template of the Y piece ----

namespace {

enum TemplateSide { kTS2 = 0, kTS6 = 1, kTS4 = 2, kTB4 = 3, kTC = 4 };

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct TemplatePairing {
    // Pentagon p = 4*pants + slot with slots 0=front-left, 1=front-right,
    // 2=back-left, 3=back-right; the right-front and left-back copies are
    // mirror images, so they carry the side cycle in reversed order.
    int type_of[12][5];
    int slot_of[12][5];
    std::vector<std::array<int, 4>> glue; // {p, k, q, l}: side k of p ~ side l of q
};

const TemplatePairing& template_pairing() {
    static const TemplatePairing tables = [] {
        TemplatePairing t;
        const bool mirrored[4] = {false, true, true, false};
        for (int p = 0; p < 12; ++p)
            for (int k = 0; k < 5; ++k) {
                int ty = mirrored[p % 4] ? (5 - k) % 5 : k;
                t.type_of[p][k] = ty;
                t.slot_of[p][ty] = k;
            }
        auto bond = [&t](int p, int ty, int q) {
            t.glue.push_back({p, t.slot_of[p][ty], q, t.slot_of[q][ty]});
        };
        for (int pants = 0; pants < 3; ++pants) {
            int a = 4 * pants;
            int nb = 4 * ((pants + 1) % 3);
            // Front and back layers each merge left|right along s/6 and c,
            // the two sides flanking the cuff arc.
            bond(a + 0, kTS6, a + 1);
            bond(a + 2, kTS6, a + 3);
            bond(a + 0, kTC, a + 1);
            bond(a + 2, kTC, a + 3);
            // The boundary-to-boundary chain pairs front to back.
            bond(a + 0, kTS4, a + 2);
            bond(a + 1, kTS4, a + 3);
            // Cuff arcs join a pants to the next one, front onto back.
            bond(a + 0, kTS2, nb + 2);
            bond(a + 1, kTS2, nb + 3);
        }
        return t;
    }();
    return tables;
}

// Corner 5p+k sits at the start of side k; side k runs corner k -> k+1.
int corner_start(int p, int k) { return 5 * p + k; }
int corner_end(int p, int k) { return 5 * p + (k + 1) % 5; }

} // namespace

YTemplateStats y_template_stats() {
    const TemplatePairing& t = template_pairing();
    YTemplateStats st;
    st.pentagons = 12;
    st.faces = 12;
    st.edges = (int)t.glue.size() + 12; // 24 interior + 12 boundary arcs

    // Identify corners across glued sides; the identification reverses the
    // walking direction, start against end.
    DisjointSets corners(60);
    for (const auto& [p, k, q, l] : t.glue) {
        corners.unite(corner_start(p, k), corner_end(q, l));
        corners.unite(corner_end(p, k), corner_start(q, l));
    }
    std::set<int> classes;
    for (int c = 0; c < 60; ++c) classes.insert(corners.find(c));
    st.vertices = (int)classes.size();
    st.euler = st.vertices - st.edges + st.faces;

    DisjointSets pieces(12);
    for (const auto& [p, k, q, l] : t.glue) pieces.unite(p, q);
    std::set<int> comps;
    for (int p = 0; p < 12; ++p) comps.insert(pieces.find(p));
    st.connected = comps.size() == 1;

    // Boundary circuits: walk the unglued quarter arcs through their shared
    // endpoint classes. Every boundary vertex must see exactly two arcs.
    std::map<int, std::vector<int>> at_vertex;
    std::vector<std::set<int>> circuit_verts;
    std::vector<int> circuit_pants;
    for (int p = 0; p < 12; ++p) {
        int k = t.slot_of[p][kTB4];
        at_vertex[corners.find(corner_start(p, k))].push_back(p);
        at_vertex[corners.find(corner_end(p, k))].push_back(p);
    }
    bool walkable = true;
    for (const auto& [v, arcs] : at_vertex)
        if (arcs.size() != 2) walkable = false;
    if (walkable) {
        std::set<int> used;
        for (int p0 = 0; p0 < 12; ++p0) {
            if (used.count(p0)) continue;
            int len = 0;
            std::set<int> verts, pants;
            int cur = p0;
            int from = corners.find(corner_start(cur, t.slot_of[cur][kTB4]));
            while (!used.count(cur)) {
                used.insert(cur);
                ++len;
                pants.insert(cur / 4);
                int k = t.slot_of[cur][kTB4];
                int s1 = corners.find(corner_start(cur, k));
                int e1 = corners.find(corner_end(cur, k));
                verts.insert(s1);
                verts.insert(e1);
                int to = (s1 == from) ? e1 : s1;
                int next = -1;
                for (int cand : at_vertex[to])
                    if (cand != cur && !used.count(cand)) next = cand;
                if (next < 0) break;
                from = to;
                cur = next;
            }
            st.boundary_lengths.push_back(len);
            circuit_verts.push_back(verts);
            circuit_pants.push_back(pants.size() == 1 ? *pants.begin() : -1);
        }
        st.boundary_circuits = (int)st.boundary_lengths.size();
        st.boundary_per_pants = st.boundary_circuits == 3;
        for (int cp : circuit_pants)
            if (cp < 0) st.boundary_per_pants = false;
        for (int l : st.boundary_lengths)
            if (l != 4) st.boundary_per_pants = false;
    }

    // Typed edge subgraphs over the vertex classes.
    auto edges_of = [&](int ty) {
        std::vector<std::pair<int, int>> out;
        std::vector<int> pants;
        for (const auto& [p, k, q, l] : t.glue) {
            if (t.type_of[p][k] != ty) continue;
            out.push_back({corners.find(corner_start(p, k)),
                           corners.find(corner_end(p, k))});
            pants.push_back(p / 4);
        }
        return std::make_pair(out, pants);
    };

    { // the six s/6 sides close into one hexagonal curve
        auto [ed, owner] = edges_of(kTS6);
        std::map<int, int> deg;
        for (auto& [u, v] : ed) {
            ++deg[u];
            ++deg[v];
        }
        bool ok = ed.size() == 6 && deg.size() == 6;
        for (auto& [v, d] : deg)
            if (d != 2) ok = false;
        if (ok) { // connected single cycle
            std::map<int, int> id;
            for (auto& [u, v] : ed) {
                id.emplace(u, (int)id.size());
                id.emplace(v, (int)id.size());
            }
            DisjointSets d2((int)id.size());
            for (auto& [u, v] : ed) d2.unite(id[u], id[v]);
            std::set<int> cc;
            for (auto& [u, v] : ed) cc.insert(d2.find(id[u]));
            ok = cc.size() == 1;
        }
        st.seam_single_hexagon = ok;
    }
    { // the six s/2 sides close into three two-arc circles
        auto [ed, owner] = edges_of(kTS2);
        std::map<std::pair<int, int>, int> arcs;
        std::map<int, int> deg;
        bool ok = ed.size() == 6;
        for (auto& [u, v] : ed) {
            if (u == v) ok = false;
            ++arcs[{std::min(u, v), std::max(u, v)}];
            ++deg[u];
            ++deg[v];
        }
        if (arcs.size() != 3 || deg.size() != 6) ok = false;
        for (auto& [pr, cnt] : arcs)
            if (cnt != 2) ok = false;
        for (auto& [v, d] : deg)
            if (d != 2) ok = false;
        st.cuffs_three_bigons = ok;
    }
    { // per pants, the two s/4 sides chain boundary point to boundary point
        auto [ed, owner] = edges_of(kTS4);
        bool ok = ed.size() == 6 && st.boundary_per_pants;
        for (int pants = 0; pants < 3 && ok; ++pants) {
            std::vector<std::pair<int, int>> mine;
            for (size_t i = 0; i < ed.size(); ++i)
                if (owner[i] == pants) mine.push_back(ed[i]);
            if (mine.size() != 2) {
                ok = false;
                break;
            }
            std::map<int, int> deg;
            for (auto& [u, v] : mine) {
                ++deg[u];
                ++deg[v];
            }
            std::vector<int> ends;
            int inner = 0;
            for (auto& [v, d] : deg) {
                if (d == 1)
                    ends.push_back(v);
                else if (d == 2)
                    ++inner;
                else
                    ok = false;
            }
            if (ends.size() != 2 || inner != 1 || deg.size() != 3) ok = false;
            int circuit = -1;
            for (size_t i = 0; i < circuit_pants.size(); ++i)
                if (circuit_pants[i] == pants) circuit = (int)i;
            if (circuit < 0) {
                ok = false;
                break;
            }
            for (int e : ends)
                if (!circuit_verts[circuit].count(e)) ok = false;
        }
        st.crossing_arcs_ok = ok;
    }

    // Cutting along all curve sides leaves the c sides as the only interior
    // gluings: regions are pentagon pairs, each with disk Euler count.
    DisjointSets region(12);
    for (const auto& [p, k, q, l] : t.glue)
        if (t.type_of[p][k] == kTC) region.unite(p, q);
    std::map<int, std::vector<int>> regions;
    for (int p = 0; p < 12; ++p) regions[region.find(p)].push_back(p);
    st.complement_regions = (int)regions.size();
    st.complement_all_disks = true;
    for (auto& [root, members] : regions) {
        std::set<int> in(members.begin(), members.end());
        DisjointSets local(60);
        int interior = 0;
        for (const auto& [p, k, q, l] : t.glue) {
            if (t.type_of[p][k] != kTC) continue;
            if (!in.count(p) || !in.count(q)) continue;
            local.unite(corner_start(p, k), corner_end(q, l));
            local.unite(corner_end(p, k), corner_start(q, l));
            ++interior;
        }
        std::set<int> lv;
        for (int p : members)
            for (int c = 0; c < 5; ++c) lv.insert(local.find(5 * p + c));
        int le = 5 * (int)members.size() - interior;
        int chi = (int)lv.size() - le + (int)members.size();
        if (chi != 1 || members.size() != 2) st.complement_all_disks = false;
    }

    st.pass = st.vertices == 21 && st.edges == 36 && st.euler == -3 &&
              st.boundary_circuits == 3 && st.boundary_per_pants &&
              st.seam_single_hexagon && st.cuffs_three_bigons &&
              st.crossing_arcs_ok && st.complement_regions == 6 &&
              st.complement_all_disks && st.connected;
    return st;
}

// ---- Y-piece surfaces ----

int y_genus(int vertices) {
    if (vertices < 2) throw ParamError("need at least two vertices");
    if (vertices % 2 != 0) throw ParityError("vertex count must be even");
    return (3 * vertices + 2) / 2;
}

namespace {

YSurfaceModel assemble_y_surface(const CubicMultigraph& g) {
    static const bool template_ok = y_template_stats().pass;
    assert(template_ok);
    (void)template_ok;

    YSurfaceModel model{g};
    model.pentagon = solve_pentagon();
    model.genus = y_genus(g.vertex_count());

    const double s = model.pentagon.s;
    const double b = model.pentagon.b;
    int edges = (int)g.edge_list().size();
    model.gluing_lengths.assign(edges, b);
    model.gluing_twists.assign(edges, 0.0);

    model.arc_o = b / 2.0;
    model.arc_p = 2.0 * s / 3.0;
    model.arc_q = s / 2.0;
    model.arc_r = s / 6.0;

    auto add = [&model](std::string family, int vertex, int edge, int index,
                        int segments, double segment_length) {
        CurveSpec c;
        c.family = std::move(family);
        c.vertex = vertex;
        c.edge = edge;
        c.index = index;
        c.segments = segments;
        c.segment_length = segment_length;
        c.length = segments * segment_length;
        model.curves.push_back(std::move(c));
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int k = 0; k < 3; ++k) add("cuff", v, -1, k, 2, s / 2.0);
        add("seam", v, -1, 0, 6, s / 6.0);
    }
    for (int e = 0; e < edges; ++e) add("crossing", -1, e, 0, 4, s / 4.0);
    return model;
}

} // namespace

YSurfaceModel build_y_surface(const CubicMultigraph& g) {
    int gi = girth(g);
    if (gi < 6)
        throw GirthError("girth " + std::to_string(gi) +
                         " is below 6; apply girth_lift first");
    return assemble_y_surface(g);
}

YSurfaceModel build_y_surface_unchecked(const CubicMultigraph& g) {
    return assemble_y_surface(g);
}

CertificateReport verify_systole_certificate(const YSurfaceModel& model) {
    const double s = model.pentagon.s;
    const double b = model.pentagon.b;
    const int gi = girth(model.base_graph);

    CertificateReport rep;
    auto add = [&rep](int number, std::string name, double margin) {
        CertificateCheck c;
        c.number = number;
        c.name = std::move(name);
        c.margin = margin;
        c.pass = margin > 0.0;
        rep.checks.push_back(std::move(c));
    };

    add(1, "girth", (gi - 6) + kCertSlack);

    double arc_dev = std::abs(model.arc_o - b / 2.0);
    arc_dev = std::max(arc_dev, std::abs(model.arc_p -
                                         2.0 * pants_cuff_distance(s, s, b)));
    arc_dev = std::max(arc_dev, std::abs(model.arc_q - s / 2.0));
    arc_dev = std::max(arc_dev, std::abs(model.arc_r - 2.0 * model.pentagon.c));
    add(2, "arc-bounds", kArcTolerance - arc_dev);

    // Curves projecting to a cycle cross at least girth transversal strips.
    double cycle_bound = gi * (s / 6.0);
    add(3, "cycle-projection", (cycle_bound - s) + kCertSlack);

    // Curves projecting to a path leave and re-enter through collar arcs.
    double path_bound =
        2.0 * std::min({model.arc_o, model.arc_p, model.arc_q});
    add(4, "path-projection", (path_bound - s) + kCertSlack);

    // Curves inside one Y piece either cross all three pants or cross the
    // boundary collar twice.
    double piece_bound = std::min(3.0 * (s / 3.0), 2.0 * (b / 2.0));
    add(5, "single-piece", (piece_bound - s) + kCertSlack);

    double curve_dev = model.curves.empty() ? 1.0 : 0.0;
    for (const CurveSpec& c : model.curves) {
        curve_dev = std::max(curve_dev, std::abs(c.length - s));
        curve_dev = std::max(
            curve_dev, std::abs(c.segments * c.segment_length - c.length));
    }
    add(6, "curve-lengths", kCertSlack - curve_dev);

    rep.case_bound = std::min({cycle_bound, path_bound, piece_bound});
    rep.min_margin = rep.checks.front().margin;
    rep.pass = true;
    for (const CertificateCheck& c : rep.checks) {
        rep.min_margin = std::min(rep.min_margin, c.margin);
        rep.pass = rep.pass && c.pass;
    }
    return rep;
}

// ---- JSON ----

namespace {

json pentagon_to_json(const PentagonData& p) {
    json j;
    j["s"] = p.s;
    j["b"] = p.b;
    j["c"] = p.c;
    j["sides"] = p.sides;
    j["residuals"] = p.residuals;
    j["c_is_s_over_12"] = p.c_is_s_over_12;
    j["best_fit_c"] = p.best_fit_c;
    return j;
}

PentagonData pentagon_from_json(const json& j) {
    PentagonData p;
    p.s = j.at("s").get<double>();
    p.b = j.at("b").get<double>();
    p.c = j.at("c").get<double>();
    auto sides = j.at("sides").get<std::vector<double>>();
    auto residuals = j.at("residuals").get<std::vector<double>>();
    if (sides.size() != 5 || residuals.size() != 5)
        throw FormatError("pentagon arrays must have five entries");
    std::copy(sides.begin(), sides.end(), p.sides.begin());
    std::copy(residuals.begin(), residuals.end(), p.residuals.begin());
    p.c_is_s_over_12 = j.at("c_is_s_over_12").get<bool>();
    p.best_fit_c = j.at("best_fit_c").get<double>();
    return p;
}

json square_to_json(const SquareData& s) {
    json j;
    j["t"] = s.t;
    j["opposite_side_distance"] = s.opposite_side_distance;
    j["side_half"] = s.side_half;
    j["side"] = s.side;
    j["basic_pair_distance"] = s.basic_pair_distance;
    j["systole_length"] = s.systole_length;
    return j;
}

SquareData square_from_json(const json& j) {
    SquareData s;
    s.t = j.at("t").get<double>();
    s.opposite_side_distance = j.at("opposite_side_distance").get<double>();
    s.side_half = j.at("side_half").get<double>();
    s.side = j.at("side").get<double>();
    s.basic_pair_distance = j.at("basic_pair_distance").get<double>();
    s.systole_length = j.at("systole_length").get<double>();
    return s;
}

json model_to_json(const HairyTorusModel& m) {
    json j;
    j["m"] = m.m;
    j["n"] = m.n;
    j["genus"] = m.genus;
    j["square"] = square_to_json(m.square);
    j["singular_count"] = m.singular_count;
    j["systole_length"] = m.systole_length;
    j["bers_lower_bound"] = m.bers_lower_bound;
    return j;
}

json filling_to_json(const GridFillingCertificate& c) {
    json j;
    j["faces"] = c.faces;
    j["all_quadrilateral"] = c.all_quadrilateral;
    j["grid_edges"] = c.grid_edges;
    j["covered_edges"] = c.covered_edges;
    j["all_edges_covered"] = c.all_edges_covered;
    j["euler"] = c.euler;
    j["pass"] = c.pass;
    return j;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("invalid JSON");
    return j;
}

} // namespace

std::string to_json(const PantsSurface& s) {
    json j;
    j["graph"] = to_cmg(s.graph);
    j["lengths"] = s.lengths;
    j["twists"] = s.twists;
    return j.dump(2);
}

PantsSurface pants_surface_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        PantsSurface s{from_cmg(j.at("graph").get<std::string>()), {}, {}};
        s.lengths = j.at("lengths").get<std::vector<double>>();
        s.twists = j.at("twists").get<std::vector<double>>();
        if (s.lengths.size() != s.graph.edge_list().size() ||
            s.twists.size() != s.graph.edge_list().size())
            throw FormatError("length/twist arrays must match the edge count");
        return s;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad pants surface JSON: ") + e.what());
    }
}

std::string to_json(const HairyTorusModel& model) {
    return model_to_json(model).dump(2);
}

HairyTorusModel hairy_torus_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        HairyTorusModel m;
        m.m = j.at("m").get<int>();
        m.n = j.at("n").get<int>();
        m.genus = j.at("genus").get<int>();
        m.square = square_from_json(j.at("square"));
        m.singular_count = j.at("singular_count").get<int>();
        m.systole_length = j.at("systole_length").get<double>();
        m.bers_lower_bound = j.at("bers_lower_bound").get<double>();
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad hairy torus JSON: ") + e.what());
    }
}

std::string to_json(const HairyTorusReport& report) {
    json j;
    j["model"] = model_to_json(report.model);
    j["two_sqrt_genus"] = report.two_sqrt_genus;
    j["bers_exceeds_2sqrt_g"] = report.bers_exceeds_2sqrt_g;
    j["wrap_bound"] = report.wrap_bound;
    j["pair_systole_certified"] = report.pair_systole_certified;
    j["filling"] = filling_to_json(report.filling);
    return j.dump(2);
}

std::string to_json(const YSurfaceModel& model) {
    json j;
    j["graph"] = to_cmg(model.base_graph);
    j["pentagon"] = pentagon_to_json(model.pentagon);
    j["genus"] = model.genus;
    j["gluing_lengths"] = model.gluing_lengths;
    j["gluing_twists"] = model.gluing_twists;
    j["arc_bounds"] = {{"o", model.arc_o},
                       {"p", model.arc_p},
                       {"q", model.arc_q},
                       {"r", model.arc_r}};
    json curves = json::array();
    for (const CurveSpec& c : model.curves) {
        json cj;
        cj["family"] = c.family;
        cj["vertex"] = c.vertex;
        cj["edge"] = c.edge;
        cj["index"] = c.index;
        cj["segments"] = c.segments;
        cj["segment_length"] = c.segment_length;
        cj["length"] = c.length;
        curves.push_back(std::move(cj));
    }
    j["curves"] = std::move(curves);
    return j.dump(2);
}

YSurfaceModel y_surface_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        YSurfaceModel m{from_cmg(j.at("graph").get<std::string>())};
        m.pentagon = pentagon_from_json(j.at("pentagon"));
        m.genus = j.at("genus").get<int>();
        m.gluing_lengths = j.at("gluing_lengths").get<std::vector<double>>();
        m.gluing_twists = j.at("gluing_twists").get<std::vector<double>>();
        const json& arcs = j.at("arc_bounds");
        m.arc_o = arcs.at("o").get<double>();
        m.arc_p = arcs.at("p").get<double>();
        m.arc_q = arcs.at("q").get<double>();
        m.arc_r = arcs.at("r").get<double>();
        for (const json& cj : j.at("curves")) {
            CurveSpec c;
            c.family = cj.at("family").get<std::string>();
            c.vertex = cj.at("vertex").get<int>();
            c.edge = cj.at("edge").get<int>();
            c.index = cj.at("index").get<int>();
            c.segments = cj.at("segments").get<int>();
            c.segment_length = cj.at("segment_length").get<double>();
            c.length = cj.at("length").get<double>();
            m.curves.push_back(std::move(c));
        }
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad Y surface JSON: ") + e.what());
    }
}

std::string to_json(const CertificateReport& report) {
    json j;
    json checks = json::array();
    for (const CertificateCheck& c : report.checks) {
        json cj;
        cj["number"] = c.number;
        cj["name"] = c.name;
        cj["margin"] = c.margin;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["min_margin"] = report.min_margin;
    j["case_bound"] = report.case_bound;
    j["pass"] = report.pass;
    return j.dump(2);
}

} // namespace atlas
