#pragma once

#include <string>
#include <vector>

#include "atlas/hypgeom.hpp"
#include "atlas/multigraph.hpp"

namespace atlas {

// ---- pants-decomposition coordinates ----

// Admissible range for cuff lengths when a surface is used as a search point.
inline constexpr double kLengthBandLow = 0.1;
inline constexpr double kLengthBandHigh = 10.0;

// Fenchel-Nielsen coordinates over a cubic multigraph: the graph is the dual
// of a pants decomposition, each edge carries the length of its gluing curve
// and the twist applied along it. twists are plain offsets, not normalized.
struct PantsSurface {
    CubicMultigraph graph;
    std::vector<double> lengths; // by edge id
    std::vector<double> twists;  // by edge id
};

// All cuffs at epsilon0(), all twists zero. At this point the collars of the
// gluing curves are as wide as the curves are long, so any curve crossing a
// collar already picks up the full cuff length.
PantsSurface net_point(const CubicMultigraph& g);

bool in_length_band(const PantsSurface& s);

// 2 * collar_width(epsilon0()); equals epsilon0() by the fixed-point identity.
double net_crossing_bound();

std::string to_json(const PantsSurface& s);
PantsSurface pants_surface_from_json(const std::string& text);

// ---- hairy torus grids ----

// Combinatorial record that the grid curves fill the torus: cutting along
// them leaves m*n quadrilateral faces and the Euler count closes.
struct GridFillingCertificate {
    int faces = 0;
    bool all_quadrilateral = false;
    int grid_edges = 0;
    int covered_edges = 0;
    bool all_edges_covered = false;
    int euler = 0; // V - E + F over the grid torus, 0 when consistent
    bool pass = false;
};

// Flat m x n grid of right-angled squares on a torus, one cone point per
// square, smoothed into a genus (m*n + 2)/2 surface.
struct HairyTorusModel {
    int m = 0;
    int n = 0;
    int genus = 0;          // (m*n + 2) / 2
    SquareData square;      // the square geometry shared by all cells
    int singular_count = 0; // m*n == 2*genus - 2
    double systole_length = 0.0;    // 2 * basic pair distance
    double bers_lower_bound = 0.0;  // 2 * t * min(m, n)
};

struct HairyTorusReport {
    HairyTorusModel model;
    double two_sqrt_genus = 0.0;
    bool bers_exceeds_2sqrt_g = false;
    // Any curve wrapping the grid torus is at least this long; when it
    // exceeds systole_length, the basic pairs are certified shortest.
    double wrap_bound = 0.0;
    bool pair_systole_certified = false;
    GridFillingCertificate filling;
};

// Requires m >= 3, n >= 3 and m*n even (ParamError otherwise).
HairyTorusModel build_hairy_torus(int m, int n);
HairyTorusReport hairy_torus_report(int m, int n);

std::string to_json(const HairyTorusModel& model);
HairyTorusModel hairy_torus_from_json(const std::string& text);
std::string to_json(const HairyTorusReport& report);

// ---- Y-piece surfaces over girth-6 graphs ----

// Genus of the surface assembled from one Y piece per vertex: (3V + 2) / 2.
// ParityError for odd vertex counts, ParamError below 2.
int y_genus(int vertices);

// One curve of the claimed-shortest system, recorded as a chain of pentagon
// sides: `segments` arcs of `segment_length` closing up to `length`.
struct CurveSpec {
    std::string family; // "cuff" | "seam" | "crossing"
    int vertex = -1;    // owning Y piece for cuff/seam curves
    int edge = -1;      // owning gluing edge for crossing curves
    int index = 0;      // 0..2 for the three cuffs of a vertex
    int segments = 0;
    double segment_length = 0.0;
    double length = 0.0;
};

// Surface glued from one Y piece (genus 1, three boundaries of length b) per
// vertex, boundaries matched along edges with zero twist. Interior pants
// curves of each Y piece all have length s.
struct YSurfaceModel {
    CubicMultigraph base_graph;
    PentagonData pentagon;
    int genus = 0;
    std::vector<double> gluing_lengths; // by edge id, all b
    std::vector<double> gluing_twists;  // by edge id, all 0
    std::vector<CurveSpec> curves;      // the claimed-shortest system
    // Lower bounds for geodesic arcs by how they cross the decomposition.
    double arc_o = 0.0; // runs through a gluing collar: b/2
    double arc_p = 0.0; // joins two different cuffs of one pants: 2s/3
    double arc_q = 0.0; // returns to the same cuff: s/2
    double arc_r = 0.0; // crosses one transversal pentagon strip: s/6
};

// Requires girth(g) >= 6 and throws GirthError otherwise; apply girth_lift
// first when the input is shorter-girthed.
YSurfaceModel build_y_surface(const CubicMultigraph& g);

// Same assembly without the girth gate, for negative controls: the
// certificate below is expected to fail on such models.
YSurfaceModel build_y_surface_unchecked(const CubicMultigraph& g);

// One verified inequality. margin folds in the evaluation slack, so a check
// passes exactly when its margin is positive; a failed inequality shows up
// as a distinctly negative margin rather than an exception.
struct CertificateCheck {
    int number = 0;
    std::string name;
    double margin = 0.0;
    bool pass = false;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;
    double min_margin = 0.0;
    // Smallest curve-length lower bound over all case analyses; at an honest
    // model this is s itself (the system attains every tight case).
    double case_bound = 0.0;
    bool pass = false;
};

// Checks, in order: (1) base girth at least 6; (2) arc bounds consistent
// with the pentagon solution; (3) cycle-projecting curves at least
// girth * s/6; (4) path-projecting curves at least 2 * min(O, P, Q);
// (5) curves inside one Y piece at least min(3 * s/3, 2 * b/2); (6) every
// recorded curve closes at length s.
CertificateReport verify_systole_certificate(const YSurfaceModel& model);

std::string to_json(const YSurfaceModel& model);
YSurfaceModel y_surface_from_json(const std::string& text);
std::string to_json(const CertificateReport& report);

// ---- pentagon template of the Y piece ----

// The Y piece is tiled by 12 right-angled pentagons with sides
// (s/2, s/6, s/4, b/4, c). These are the combinatorial facts the curve
// system relies on, computed from the explicit side pairing.
struct YTemplateStats {
    int pentagons = 0;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler = 0;                      // -3 for a one-holed, three-boundary piece
    int boundary_circuits = 0;          // 3
    std::vector<int> boundary_lengths;  // {4, 4, 4} quarter arcs
    bool boundary_per_pants = false;    // each circuit stays in one pants
    bool seam_single_hexagon = false;   // the six s/6 sides close one curve
    bool cuffs_three_bigons = false;    // the six s/2 sides close three curves
    bool crossing_arcs_ok = false;      // per pants: an s/4 chain boundary-to-boundary
    int complement_regions = 0;         // 6 after cutting along the curve system
    bool complement_all_disks = false;  // each region is a two-pentagon disk
    bool connected = false;
    bool pass = false;
};

YTemplateStats y_template_stats();

} // namespace atlas
