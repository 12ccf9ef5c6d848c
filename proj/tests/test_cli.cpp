// Black-box tests for the systolic-atlas command line tool.
//
// The binary under test is located through the ATLAS_CLI_BIN environment
// variable, which the build system points at the freshly built executable.
// Each case shells out, captures stdout/stderr separately, and checks the
// exit status, so the contract exercised here is exactly the one scripts
// see: data on stdout, diagnostics on stderr, 0/2/3 exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atlas/multigraph.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    return "/tmp/atlas_cli_" + std::to_string(::getpid()) + "_" + tag;
}

// Locates the binary under test: ATLAS_CLI_BIN if set (ctest sets it),
// otherwise the tool sitting next to this test executable.
std::string cli_binary() {
    if (const char* env = std::getenv("ATLAS_CLI_BIN")) return env;
    char buf[4096];
    const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    REQUIRE(n > 0);
    std::string self(buf, static_cast<size_t>(n));
    return self.substr(0, self.rfind('/')) + "/systolic-atlas";
}

// Runs the tool with the given argument string and captures both streams.
RunResult run_cli(const std::string& args) {
    static const std::string bin = cli_binary();

    const std::string err_file = temp_path("stderr.txt");
    const std::string cmd = bin + " " + args + " 2>" + err_file;

    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_file);
    std::remove(err_file.c_str());
    return r;
}

int code_vertices(const std::string& code) {
    return std::stoi(code.substr(0, code.find('|')));
}

} // namespace

// ---- data subcommands ----

TEST_CASE("census subcommand matches the enumeration counts") {
    RunResult r = run_cli("census --v 4");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("V").get<int>() == 4);
    CHECK(j.at("count").get<std::size_t>() == 5);

    RunResult csv = run_cli("census --v 6 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == "V,count\n6,17\n");

    // the report subcommand's own --v-max default must not shadow the
    // census size guard, which admits the full cached range
    RunResult big = run_cli("census --v 10");
    CHECK(big.code == 0);
    CHECK(json::parse(big.out).at("count").get<std::size_t>() == 388);
}

TEST_CASE("pentagon subcommand prints the solved constants") {
    RunResult r = run_cli("pentagon");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    const double s = j.at("s").get<double>();
    const double b = j.at("b").get<double>();
    CHECK(s == doctest::Approx(4.39).epsilon(0).scale(0).epsilon(0.01 / 4.39));
    CHECK(b == doctest::Approx(7.77).epsilon(0.01 / 7.77));
    CHECK(s == doctest::Approx(4.397146055841872).epsilon(1e-15));
    CHECK(j.at("residuals").size() == 5);
    CHECK(j.at("c_is_s_over_12").get<bool>());

    RunResult csv = run_cli("pentagon --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("quantity,value\n", 0) == 0);
    CHECK(csv.out.find("s,4.3971460558418") != std::string::npos);
    CHECK(csv.out.find("b,7.7721015566579") != std::string::npos);
}

TEST_CASE("mdp-ball subcommand respects the counting bound") {
    RunResult r = run_cli("mdp-ball --g 3 --r 2 --seed 0");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("bound").get<std::string>() == "81");
    CHECK(j.at("within_bound").get<bool>());
    CHECK(j.at("size").get<std::size_t>() <= 81);
    CHECK(j.at("vertices").get<int>() == 4);
    CHECK(code_vertices(j.at("start").get<std::string>()) == 4);
}

TEST_CASE("girth-lift subcommand reports gadgets and distortion") {
    RunResult r = run_cli("girth-lift --v 4 --seed 0");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("girth_before").get<int>() < 6);
    CHECK(j.at("girth_after").get<int>() >= 6);
    const int gadgets = j.at("gadgets").get<int>();
    CHECK(gadgets >= 1);
    const int v_in = code_vertices(j.at("input").get<std::string>());
    const int v_out = code_vertices(j.at("output").get<std::string>());
    CHECK(v_in == 4);
    CHECK(v_out == v_in + 16 * gadgets);
    CHECK(j.at("distortion").at("a").get<double>() >= 1.0);
    CHECK(j.at("distortion").at("b").get<double>() >= 0.0);
}

TEST_CASE("y-surface subcommand lifts and certifies a sampled base") {
    RunResult r = run_cli("y-surface --v 2 --seed 1");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("girth_before").get<int>() < 6);
    const int v_lifted = code_vertices(j.at("lifted").get<std::string>());
    CHECK(j.at("genus").get<int>() == (3 * v_lifted + 2) / 2);
    CHECK(j.at("certificate").at("pass").get<bool>());
    CHECK(j.at("certificate").at("min_margin").get<double>() > 0.0);

    // the same run in csv form lists exactly the six certificate checks
    RunResult csv = run_cli("y-surface --v 2 --seed 1 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("number,name,margin,pass\n", 0) == 0);
    int lines = 0;
    for (char ch : csv.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 7);
    CHECK(csv.out.find("cycle-projection") != std::string::npos);
}

TEST_CASE("y-surface subcommand accepts a graph file") {
    const std::string path = temp_path("theta.cmg");
    {
        std::ofstream out(path);
        out << atlas::to_cmg(atlas::graph_from_code("2|0-1;0-1;0-1"));
    }
    RunResult r = run_cli("y-surface --cmg " + path);
    std::remove(path.c_str());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("base").get<std::string>() == "2|0-1;0-1;0-1");
    CHECK(j.at("certificate").at("pass").get<bool>());
}

TEST_CASE("hairy-torus subcommand emits the report") {
    RunResult r = run_cli("hairy-torus --m 4 --n 4");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("model").at("genus").get<int>() == 9);
    CHECK(j.at("bers_exceeds_2sqrt_g").get<bool>());
    CHECK(j.at("filling").at("pass").get<bool>());

    RunResult csv = run_cli("hairy-torus --m 4 --n 4 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("m,n,genus,", 0) == 0);
    CHECK(csv.out.find("\n4,4,9,16,") != std::string::npos);
    CHECK(csv.out.find(",1,1\n") != std::string::npos);
}

TEST_CASE("sparsity subcommand emits one row per genus") {
    RunResult r = run_cli("sparsity --g-min 2 --g-max 3 --trials 8 --seed 5 --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "g,badset_fraction,median_distance,diameter");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("report subcommand aggregates census growth and constants") {
    RunResult r = run_cli("report --v-max 6");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    bool saw_v4 = false;
    for (const auto& row : j.at("census")) {
        if (row.at("V").get<int>() == 4) {
            saw_v4 = true;
            CHECK(row.at("count").get<std::size_t>() == 5);
        }
    }
    CHECK(saw_v4);
    CHECK(j.at("pentagon").at("s").get<double>() == doctest::Approx(4.397146).epsilon(1e-6));
    CHECK(j.at("square").at("systole_length").get<double>() ==
          doctest::Approx(4.896904895356152).epsilon(1e-15));
    CHECK(j.at("hairy_torus").size() == 9);

    RunResult csv = run_cli("report --v-max 6 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("g,V,count,ratio\n", 0) == 0);
    CHECK(csv.out.find("\n3,4,5,") != std::string::npos);
}

// ---- output discipline ----

TEST_CASE("repeated runs are byte identical") {
    const std::string args = "sparsity --g-min 2 --g-max 3 --trials 8 --seed 5";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("y-surface --v 4 --seed 2");
    RunResult d = run_cli("y-surface --v 4 --seed 2");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("--out moves the payload into a file") {
    const std::string path = temp_path("census.json");
    RunResult direct = run_cli("census --v 4");
    RunResult filed = run_cli("census --v 4 --out " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());

    RunResult bad = run_cli("census --v 4 --out /nonexistent-dir/census.json");
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("diagnostics go to stderr and stdout stays clean on failure") {
    RunResult r = run_cli("census --v 5");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("even") != std::string::npos);
}

// ---- exit codes ----

TEST_CASE("validation failures exit with code 2") {
    CHECK(run_cli("census --v 5").code == 2);
    CHECK(run_cli("hairy-torus --m 3 --n 3").code == 2);
    CHECK(run_cli("hairy-torus --m 2 --n 4").code == 2);
    CHECK(run_cli("y-surface --v 2 --seed 1 --no-lift").code == 2);
    CHECK(run_cli("mdp-ball --g 1 --r 2").code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    RunResult unknown = run_cli("census --v 4 --bogus");
    CHECK(unknown.code == 2);
    CHECK_FALSE(unknown.err.empty());
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("census").code == 2);          // missing required --v
    CHECK(run_cli("census --format xml").code == 2);
}

TEST_CASE("resource caps exit with code 3") {
    RunResult r = run_cli("mdp-ball --g 4 --r 3 --cap 4");
    CHECK(r.code == 3);
    CHECK(r.err.find("capped") != std::string::npos);
}

TEST_CASE("help exits cleanly for every subcommand") {
    RunResult top = run_cli("--help");
    CHECK(top.code == 0);
    for (const char* sub : {"census", "pentagon", "hairy-torus", "girth-lift",
                            "y-surface", "mdp-ball", "sparsity", "report"}) {
        CHECK(top.out.find(sub) != std::string::npos);
        RunResult r = run_cli(std::string(sub) + " --help");
        CHECK(r.code == 0);
        CHECK(r.out.find("--format") != std::string::npos);
    }
}
