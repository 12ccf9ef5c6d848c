#include "atlas/cli.hpp"

#include <algorithm>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atlas/census.hpp"
#include "atlas/errors.hpp"
#include "atlas/hypgeom.hpp"
#include "atlas/multigraph.hpp"
#include "atlas/rewrite.hpp"
#include "atlas/surfaces.hpp"
#include "json.hpp"

namespace atlas {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// CSV cells for doubles keep full round-trip precision.
std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CensusConfig census_config(const RunConfig& cfg) {
    CensusConfig cc;
    cc.v_max = cfg.v_max;
    cc.cache_dir = cfg.cache_dir;
    cc.threads = cfg.threads;
    return cc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CubicMultigraph input_graph(const RunConfig& cfg) {
    if (!cfg.cmg_path.empty()) return from_cmg(read_file(cfg.cmg_path));
    return sample_uniform(cfg.v, cfg.seed, census_config(cfg));
}

// ---- subcommand payloads ----

std::string run_census(const RunConfig& cfg) {
    CensusTable table = enumerate_census(cfg.v, census_config(cfg));
    if (cfg.format == "csv") {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "V,count\n%d,%d\n", table.V, table.count);
        return buf;
    }
    json j;
    j["V"] = table.V;
    j["count"] = table.count;
    return dump(j);
}

std::string run_pentagon(const RunConfig& cfg) {
    PentagonData p = solve_pentagon(cfg.tolerance);
    if (cfg.format == "csv") {
        std::string out = "quantity,value\n";
        out += "s," + num(p.s) + "\n";
        out += "b," + num(p.b) + "\n";
        out += "c," + num(p.c) + "\n";
        out += "best_fit_c," + num(p.best_fit_c) + "\n";
        return out;
    }
    json j;
    j["s"] = p.s;
    j["b"] = p.b;
    j["c"] = p.c;
    j["sides"] = p.sides;
    j["residuals"] = p.residuals;
    j["c_is_s_over_12"] = p.c_is_s_over_12;
    j["best_fit_c"] = p.best_fit_c;
    return dump(j);
}

std::string run_hairy_torus(const RunConfig& cfg) {
    HairyTorusReport rep = hairy_torus_report(cfg.m, cfg.n);
    if (cfg.format == "csv") {
        std::string out =
            "m,n,genus,singular_count,systole_length,bers_lower_bound,"
            "two_sqrt_genus,bers_exceeds_2sqrt_g,wrap_bound,"
            "pair_systole_certified,filling_pass\n";
        out += std::to_string(rep.model.m) + "," + std::to_string(rep.model.n) +
               "," + std::to_string(rep.model.genus) + "," +
               std::to_string(rep.model.singular_count) + "," +
               num(rep.model.systole_length) + "," +
               num(rep.model.bers_lower_bound) + "," + num(rep.two_sqrt_genus) +
               "," + std::to_string(rep.bers_exceeds_2sqrt_g ? 1 : 0) + "," +
               num(rep.wrap_bound) + "," +
               std::to_string(rep.pair_systole_certified ? 1 : 0) + "," +
               std::to_string(rep.filling.pass ? 1 : 0) + "\n";
        return out;
    }
    return to_json(rep) + "\n";
}

std::string run_girth_lift(const RunConfig& cfg) {
    CubicMultigraph base = input_graph(cfg);
    int before = girth(base);
    LiftResult lift = girth_lift(base);
    if (cfg.format == "csv") {
        std::string out =
            "girth_before,girth_after,gadgets,vertices_before,vertices_after,"
            "a,b\n";
        out += std::to_string(before) + "," +
               std::to_string(girth(lift.graph)) + "," +
               std::to_string(lift.gadgets) + "," +
               std::to_string(base.vertex_count()) + "," +
               std::to_string(lift.graph.vertex_count()) + "," +
               num(lift.corr.a) + "," + num(lift.corr.b) + "\n";
        return out;
    }
    json j;
    j["input"] = canonical_code(base);
    j["girth_before"] = before;
    j["output"] = canonical_code(lift.graph);
    j["girth_after"] = girth(lift.graph);
    j["gadgets"] = lift.gadgets;
    j["distortion"] = {{"a", lift.corr.a}, {"b", lift.corr.b}};
    return dump(j);
}

std::string run_y_surface(const RunConfig& cfg) {
    CubicMultigraph base = input_graph(cfg);
    int before = girth(base);

    CubicMultigraph lifted = base;
    int gadgets = 0;
    double dist_a = 1.0, dist_b = 0.0;
    if (!cfg.no_lift) {
        LiftResult lift = girth_lift(base);
        lifted = lift.graph;
        gadgets = lift.gadgets;
        dist_a = lift.corr.a;
        dist_b = lift.corr.b;
    }
    YSurfaceModel model = build_y_surface(lifted);
    CertificateReport rep = verify_systole_certificate(model);

    if (cfg.format == "csv") {
        std::string out = "number,name,margin,pass\n";
        for (const CertificateCheck& c : rep.checks)
            out += std::to_string(c.number) + "," + c.name + "," +
                   num(c.margin) + "," + std::to_string(c.pass ? 1 : 0) + "\n";
        return out;
    }
    json j;
    j["base"] = canonical_code(base);
    j["girth_before"] = before;
    j["lifted"] = canonical_code(lifted);
    j["gadgets"] = gadgets;
    j["distortion"] = {{"a", dist_a}, {"b", dist_b}};
    j["genus"] = model.genus;
    j["certificate"] = json::parse(to_json(rep));
    return dump(j);
}

std::string run_mdp_ball(const RunConfig& cfg) {
    BigNat bound = ball_bound(cfg.g, cfg.r); // validates g and r
    int vertices = 2 * cfg.g - 2;
    CubicMultigraph start = sample_uniform(vertices, cfg.seed, census_config(cfg));
    auto distances = ball(mdp_vertex(start), cfg.r, cfg.vertex_cap);
    bool within = BigNat((std::uint64_t)distances.size()).leq(bound);
    if (cfg.format == "csv") {
        std::string out = "g,r,vertices,size,bound,within_bound\n";
        out += std::to_string(cfg.g) + "," + std::to_string(cfg.r) + "," +
               std::to_string(vertices) + "," +
               std::to_string(distances.size()) + "," + bound.to_string() +
               "," + std::to_string(within ? 1 : 0) + "\n";
        return out;
    }
    json j;
    j["g"] = cfg.g;
    j["r"] = cfg.r;
    j["vertices"] = vertices;
    j["start"] = canonical_code(start);
    j["size"] = distances.size();
    j["bound"] = bound.to_string();
    j["within_bound"] = within;
    return dump(j);
}

std::string run_sparsity(const RunConfig& cfg) {
    SparsityReport rep =
        sparsity_experiment(cfg.g_min, cfg.g_max, cfg.cycle_cap, cfg.h,
                            cfg.trials, cfg.seed, cfg.vertex_cap);
    if (cfg.format == "csv") return sparsity_csv(rep);
    json j;
    j["g_min"] = rep.g_min;
    j["g_max"] = rep.g_max;
    j["cycle_cap"] = rep.L;
    j["h"] = rep.h;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    json rows = json::array();
    for (const GenusSparsity& row : rep.rows) {
        json rj;
        rj["genus"] = row.genus;
        rj["vertices"] = row.vertices;
        rj["census_count"] = row.census_count;
        rj["badset_size"] = row.badset_size;
        rj["fraction"] = row.fraction;
        rj["packing_method"] = row.packing_method;
        rj["empty_set_error"] = row.empty_set_error;
        rj["distances"] = row.distances;
        rj["median_distance"] = row.median_distance;
        rj["diameter"] = row.diameter;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return dump(j);
}

std::string run_report(const RunConfig& cfg) {
    CensusConfig cc = census_config(cfg);
    cc.v_max = std::max(cc.v_max, cfg.report_v_max);
    std::vector<GrowthRow> growth = growth_report(cfg.report_v_max, cc);
    if (cfg.format == "csv") {
        std::string out = "g,V,count,ratio\n";
        for (const GrowthRow& row : growth)
            out += std::to_string(row.g) + "," + std::to_string(row.V) + "," +
                   std::to_string(row.count) + "," + num(row.ratio) + "\n";
        return out;
    }
    json j;
    json rows = json::array();
    for (const GrowthRow& row : growth) {
        json rj;
        rj["g"] = row.g;
        rj["V"] = row.V;
        rj["count"] = row.count;
        rj["vertex_scale"] = row.vertex_scale.to_string();
        rj["ratio"] = row.ratio;
        rows.push_back(std::move(rj));
    }
    j["census"] = std::move(rows);

    PentagonData p = solve_pentagon();
    j["pentagon"] = {{"s", p.s}, {"b", p.b}, {"c", p.c}};
    SquareData sq = square_data();
    j["square"] = {{"t", sq.t},
                   {"side", sq.side},
                   {"systole_length", sq.systole_length}};
    json sweep = json::array();
    for (int n = 4; n <= 20; n += 2) {
        HairyTorusReport rep = hairy_torus_report(n, n);
        json rj;
        rj["n"] = n;
        rj["genus"] = rep.model.genus;
        rj["bers_lower_bound"] = rep.model.bers_lower_bound;
        rj["two_sqrt_genus"] = rep.two_sqrt_genus;
        rj["bers_exceeds_2sqrt_g"] = rep.bers_exceeds_2sqrt_g;
        sweep.push_back(std::move(rj));
    }
    j["hairy_torus"] = std::move(sweep);
    return dump(j);
}

int emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return std::cout ? 0 : 2;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << cfg.out << "\n";
        return 2;
    }
    out << payload;
    return out ? 0 : 2;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the payload to a file");
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "Census cache directory (overrides SYSTOLIC_ATLAS_CACHE)");
    sub->add_option("--threads", cfg.threads,
                    "Worker cap for census generation (0 = all cores)");
}

} // namespace

int cli_main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Cubic multigraph census, rewrite-metric balls, and"
                 " hyperbolic surface certificates"};
    app.require_subcommand(1);

    CLI::App* census = app.add_subcommand(
        "census", "Count isomorphism classes of connected cubic multigraphs");
    census->add_option("--v", cfg.v, "Vertex count (even, >= 2)")->required();
    census->add_option("--v-max", cfg.v_max, "Census size guard")
        ->capture_default_str();
    add_common(census, cfg);

    CLI::App* pentagon = app.add_subcommand(
        "pentagon", "Solve the right-angled pentagon closing the Y piece");
    pentagon->add_option("--tolerance", cfg.tolerance, "Root tolerance")
        ->capture_default_str();
    add_common(pentagon, cfg);

    CLI::App* hairy = app.add_subcommand(
        "hairy-torus", "Square-grid torus model with its filling certificate");
    hairy->add_option("--m", cfg.m, "Grid width (>= 3)")->required();
    hairy->add_option("--n", cfg.n, "Grid height (>= 3, m*n even)")->required();
    add_common(hairy, cfg);

    CLI::App* lift = app.add_subcommand(
        "girth-lift", "Lift a sampled or given graph to girth 6");
    lift->add_option("--v", cfg.v, "Sample a census graph on V vertices");
    lift->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    lift->add_option("--cmg", cfg.cmg_path, "Read the input graph from a file");
    add_common(lift, cfg);

    CLI::App* ysurf = app.add_subcommand(
        "y-surface", "Assemble a Y-piece surface and verify its certificate");
    ysurf->add_option("--v", cfg.v, "Sample a census graph on V vertices");
    ysurf->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    ysurf->add_option("--cmg", cfg.cmg_path, "Read the base graph from a file");
    ysurf->add_flag("--no-lift", cfg.no_lift,
                    "Fail on girth < 6 instead of lifting");
    add_common(ysurf, cfg);

    CLI::App* ball = app.add_subcommand(
        "mdp-ball", "Grow a rewrite-metric ball and compare to the bound");
    ball->add_option("--g", cfg.g, "Genus (vertex count 2g-2)")->required();
    ball->add_option("--r", cfg.r, "Ball radius")->required();
    ball->add_option("--seed", cfg.seed, "Center sampling seed")
        ->capture_default_str();
    ball->add_option("--cap", cfg.vertex_cap, "Vertex guard for move growth")
        ->capture_default_str();
    add_common(ball, cfg);

    CLI::App* sparsity = app.add_subcommand(
        "sparsity", "Distance-to-cycle-packed-set experiment per genus");
    sparsity->add_option("--g-min", cfg.g_min, "First genus")
        ->capture_default_str();
    sparsity->add_option("--g-max", cfg.g_max, "Last genus")
        ->capture_default_str();
    sparsity->add_option("--l", cfg.cycle_cap, "Cycle length cap")
        ->capture_default_str();
    sparsity->add_option("--density", cfg.h,
                         "Packing density target h in (0, 1)")
        ->capture_default_str();
    sparsity->add_option("--trials", cfg.trials, "Samples per genus")
        ->capture_default_str();
    sparsity->add_option("--seed", cfg.seed, "Sampling seed")
        ->capture_default_str();
    sparsity->add_option("--cap", cfg.vertex_cap, "Vertex guard for move growth")
        ->capture_default_str();
    add_common(sparsity, cfg);

    CLI::App* report = app.add_subcommand(
        "report", "Census growth plus the solved geometric constants");
    report->add_option("--v-max", cfg.report_v_max, "Largest census vertex count")
        ->capture_default_str();
    add_common(report, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the diagnostic to stderr
        return 2;
    }

    std::string payload;
    try {
        if (census->parsed()) {
            cfg.subcommand = "census";
            payload = run_census(cfg);
        } else if (pentagon->parsed()) {
            cfg.subcommand = "pentagon";
            payload = run_pentagon(cfg);
        } else if (hairy->parsed()) {
            cfg.subcommand = "hairy-torus";
            payload = run_hairy_torus(cfg);
        } else if (lift->parsed()) {
            cfg.subcommand = "girth-lift";
            payload = run_girth_lift(cfg);
        } else if (ysurf->parsed()) {
            cfg.subcommand = "y-surface";
            payload = run_y_surface(cfg);
        } else if (ball->parsed()) {
            cfg.subcommand = "mdp-ball";
            payload = run_mdp_ball(cfg);
        } else if (sparsity->parsed()) {
            cfg.subcommand = "sparsity";
            payload = run_sparsity(cfg);
        } else if (report->parsed()) {
            cfg.subcommand = "report";
            payload = run_report(cfg);
        }
    } catch (const LimitError& e) {
        std::cerr << cfg.subcommand << ": " << e.what() << "\n";
        return 3;
    } catch (const NonTerminationError& e) {
        std::cerr << cfg.subcommand << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << cfg.subcommand << ": " << e.what() << "\n";
        return 2;
    }
    return emit(cfg, payload);
}

} // namespace atlas
