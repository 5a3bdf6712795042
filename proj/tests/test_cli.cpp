#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "betaspec/diagnostics.hpp"
#include "betaspec/ensembles.hpp"
#include "betaspec/rng.hpp"
#include "betaspec/spectral.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_cli;
std::string g_tmpdir;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), p)) > 0)
        r.out.append(buf, got);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::vector<double>> csv_columns(const std::string& text, std::size_t ncols) {
    const std::vector<std::string> lines = split_lines(text);
    REQUIRE(lines.size() >= 2);
    REQUIRE(lines[0].rfind("# manifest: ", 0) == 0);
    std::vector<std::vector<double>> cols(ncols);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] == '#')
            continue;
        std::stringstream ss(lines[i]);
        std::string cell;
        for (std::size_t c = 0; c < ncols; ++c) {
            REQUIRE(std::getline(ss, cell, ','));
            cols[c].push_back(std::stod(cell));
        }
    }
    return cols;
}

nlohmann::json manifest_of(const std::string& text) {
    if (text.rfind("# manifest: ", 0) == 0) {
        const auto eol = text.find('\n');
        return nlohmann::json::parse(text.substr(12, eol - 12));
    }
    return nlohmann::json::parse(text)["manifest"];
}

std::string tmp_path(const std::string& name) { return g_tmpdir + "/" + name; }

} // namespace

TEST_CASE("sample emits a manifest-led JSON matrix with exact shapes") {
    const RunResult r = run_cli("sample --ensemble hermite --beta 2 --n 9 --seed 11");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["manifest"]["command"] == "sample");
    CHECK(doc["manifest"]["seed"] == 11);
    CHECK(doc["manifest"]["tool_version"].is_string());
    CHECK(doc["manifest"]["timestamp"] == "");
    CHECK(doc["manifest"]["params"]["ensemble"] == "hermite");
    CHECK(doc["manifest"]["params"]["beta"] == "2");
    CHECK(doc["manifest"]["params"]["n"] == "9");
    CHECK(doc["ensemble"] == "hermite");
    CHECK(doc["beta"] == 2.0);
    CHECK(doc["n"] == 9);
    REQUIRE(doc["diag"].size() == 9);
    REQUIRE(doc["offdiag"].size() == 8);

    // The matrix equals a library sample from the same seeded stream.
    betaspec::RngStream stream(11);
    const betaspec::TridiagonalMatrix T = betaspec::sample_hermite(9, 2.0, stream);
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(doc["diag"][i].get<double>() == T.diag[i]);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(doc["offdiag"][i].get<double>() == T.offdiag[i]);
}

TEST_CASE("identical invocations produce identical bytes; seeds matter") {
    const std::string cmd = "sample --ensemble laguerre --beta 1 --gamma 2 --n 6 --seed 3";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const RunResult c =
        run_cli("sample --ensemble laguerre --beta 1 --gamma 2 --n 6 --seed 4");
    CHECK(c.out != a.out);
}

TEST_CASE("eigen emits sorted eigenvalues consistent with the library") {
    const RunResult r = run_cli("eigen --ensemble hermite --beta 1 --n 40 --seed 5");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 2 + 40);
    CHECK(lines[1] == "index,eigenvalue");
    const auto cols = csv_columns(r.out, 2);
    REQUIRE(cols[1].size() == 40);

    betaspec::RngStream stream(5);
    const betaspec::TridiagonalMatrix T = betaspec::sample_hermite(40, 1.0, stream);
    const std::vector<double> lambda = betaspec::eigenvalues(T);
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(cols[0][i] == static_cast<double>(i));
        CHECK(cols[1][i] == lambda[i]); // %.17g round-trips exactly
    }
}

TEST_CASE("rootmeasure masses are a probability vector") {
    const RunResult r =
        run_cli("rootmeasure --ensemble laguerre --beta 2 --gamma 2 --n 30 --seed 8 --root 7");
    REQUIRE(r.exit_code == 0);
    const auto cols = csv_columns(r.out, 2);
    double mass = 0.0;
    for (double m : cols[1]) {
        CHECK(m >= 0.0);
        mass += m;
    }
    CHECK(std::fabs(mass - 1.0) < 1e-10);
    const nlohmann::json m = manifest_of(r.out);
    CHECK(m["params"]["root"] == "7");

    const RunResult bad =
        run_cli("rootmeasure --ensemble hermite --beta 1 --n 10 --seed 1 --root 10");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("density evaluates the law on the requested grid") {
    const RunResult r = run_cli("density --law semicircle --beta 1 --grid -2:2:401");
    REQUIRE(r.exit_code == 0);
    const auto cols = csv_columns(r.out, 2);
    REQUIRE(cols[0].size() == 401);
    CHECK(cols[0].front() == -2.0);
    CHECK(cols[0].back() == 2.0);
    CHECK(cols[0][200] == 0.0);
    CHECK(std::fabs(cols[1][200] - 0.3183098861837907) < 1e-15);
    CHECK(cols[1].front() == 0.0);
    const nlohmann::json m = manifest_of(r.out);
    CHECK(m["seed"].is_null());

    const RunResult cond =
        run_cli("density --law laguerre-conditional --beta 1 --gamma 2 --u 0.25 --grid 0:6:51");
    CHECK(cond.exit_code == 0);

    CHECK(run_cli("density --law semicircle --beta 1 --grid nonsense").exit_code == 2);
    CHECK(run_cli("density --law unknown --beta 1 --grid 0:1:5").exit_code == 2);
}

TEST_CASE("the mp alias canonicalizes to marchenko-pastur") {
    const RunResult a = run_cli("density --law mp --beta 1 --gamma 2 --grid 0:6:11");
    const RunResult b = run_cli("density --law marchenko-pastur --beta 1 --gamma 2 --grid 0:6:11");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(manifest_of(a.out)["params"]["law"] == "marchenko-pastur");
}

TEST_CASE("crosscheck reports quadrature agreement and honors tol") {
    const RunResult ok = run_cli("crosscheck --ensemble hermite --beta 1 --n 10");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("# max_abs_diff: ") != std::string::npos);
    const auto cols = csv_columns(ok.out, 4);
    for (double d : cols[3])
        CHECK(d < 1e-10);

    const RunResult strict = run_cli("crosscheck --ensemble hermite --beta 1 --n 5 --tol 1e-18");
    CHECK(strict.exit_code == 1);
}

TEST_CASE("converge matches the library sweep with the same seed") {
    const RunResult r =
        run_cli("converge --ensemble hermite --beta 2 --sizes 50,100 --trials 3 --seed 5");
    REQUIRE(r.exit_code == 0);
    const auto cols = csv_columns(r.out, 4);
    REQUIRE(cols[0].size() == 2);

    betaspec::EnsembleParams p;
    p.kind = betaspec::EnsembleKind::Hermite;
    p.beta = 2.0;
    betaspec::RngStream stream(5);
    const betaspec::ConvergenceReport report =
        betaspec::convergence_sweep(p, {50, 100}, 3, stream);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(cols[0][i] == static_cast<double>(report.rows[i].n));
        CHECK(cols[2][i] == report.rows[i].ks_mean);
        CHECK(cols[3][i] == report.rows[i].ks_std);
    }
}

TEST_CASE("ballstats emits one row per draw") {
    const RunResult r = run_cli(
        "ballstats --ensemble laguerre --beta 1 --gamma 2 --n 500 --r 2 --draws 25 --seed 9");
    REQUIRE(r.exit_code == 0);
    const auto cols = csv_columns(r.out, 4);
    REQUIRE(cols[0].size() == 25);
    for (double root : cols[1])
        CHECK(root < 500.0);
    for (double lw : cols[2])
        CHECK(lw > 0.0);
}

TEST_CASE("moments reproduces the Catalan sequence") {
    const RunResult r = run_cli("moments --law semicircle --beta 1 --kmax 6 --quad-tol 1e-12");
    REQUIRE(r.exit_code == 0);
    const auto cols = csv_columns(r.out, 2);
    REQUIRE(cols[1].size() == 7);
    const std::vector<double> want{1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 5.0};
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(std::fabs(cols[1][i] - want[i]) < 1e-9);
}

TEST_CASE("rerun regenerates artifacts byte for byte") {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"s.json", "sample --ensemble hermite --beta 0.5 --n 12 --seed 3"},
        {"e.csv", "eigen --ensemble laguerre --beta 1 --gamma 2 --n 25 --seed 99"},
        {"rm.csv", "rootmeasure --ensemble hermite --beta 2 --n 15 --seed 4 --root 3"},
        {"d.csv", "density --law hermite-conditional --beta 2 --u 0.7 --grid -3:3:61"},
        {"cc.csv", "crosscheck --ensemble laguerre --beta 1 --gamma 4 --n 12"},
        {"c.csv", "converge --ensemble hermite --beta 1 --sizes 40,80 --trials 2 --seed 6"},
        {"b.csv", "ballstats --ensemble hermite --beta 1 --n 200 --r 3 --draws 10 --seed 2"},
        {"m.csv", "moments --law mp --beta 1 --gamma 2 --kmax 3 --quad-tol 1e-11"},
    };
    for (const auto& [name, cmd] : cases) {
        CAPTURE(cmd);
        const std::string first = tmp_path(name);
        const std::string second = tmp_path("rerun_" + name);
        REQUIRE(run_cli(cmd + " --out " + first).exit_code == 0);
        REQUIRE(run_cli("rerun --manifest " + first + " --out " + second).exit_code == 0);
        CHECK(slurp(first) == slurp(second));
    }
}

TEST_CASE("rerun reads bare manifests and honors timestamps") {
    const std::string out1 = tmp_path("ts.csv");
    REQUIRE(run_cli("eigen --ensemble hermite --beta 1 --n 5 --seed 1 --timestamp 2026-08-19 --out " +
                    out1)
                .exit_code == 0);
    const std::string text = slurp(out1);
    CHECK(text.find("\"timestamp\":\"2026-08-19\"") != std::string::npos);

    // Extract the manifest line into a bare JSON file and rerun from it.
    const std::string bare = tmp_path("bare.json");
    {
        std::ofstream f(bare);
        f << text.substr(12, text.find('\n') - 12) << "\n";
    }
    const std::string out2 = tmp_path("ts2.csv");
    REQUIRE(run_cli("rerun --manifest " + bare + " --out " + out2).exit_code == 0);
    CHECK(text == slurp(out2));
}

TEST_CASE("exit codes distinguish usage errors from runtime failures") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("sample --ensemble hermite --beta 1").exit_code == 2); // missing required
    CHECK(run_cli("sample --ensemble triangle --beta 1 --n 4 --seed 1").exit_code == 2);
    CHECK(run_cli("sample --ensemble laguerre --beta 1 --gamma 0.5 --n 4 --seed 1").exit_code ==
          2);
    CHECK(run_cli("sample --ensemble hermite --beta -1 --n 4 --seed 1").exit_code == 2);
    CHECK(run_cli("eigen --ensemble hermite --beta 1 --n 5 --seed 1 --out /nonexistent/x.csv")
              .exit_code == 1);
    CHECK(run_cli("rerun --manifest /nonexistent/m.json").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("sample --help").exit_code == 0);
}

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<const char*> pass;
    pass.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
            continue;
        }
        pass.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli --cli <path-to-betaspec-binary>\n");
        return 1;
    }
    char tmpl[] = "/tmp/betaspec_cli_XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (dir == nullptr) {
        std::fprintf(stderr, "mkdtemp failed\n");
        return 1;
    }
    g_tmpdir = dir;
    context.applyCommandLine(static_cast<int>(pass.size()), pass.data());
    const int rc = context.run();
    const int rc_cleanup = std::system(("rm -rf " + g_tmpdir).c_str());
    (void)rc_cleanup;
    return rc;
}
