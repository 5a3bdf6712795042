#include "betaspec/diagnostics.hpp"
#include "betaspec/ensembles.hpp"
#include "betaspec/laws.hpp"
#include "betaspec/rng.hpp"
#include "betaspec/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    return out;
}

// Parameters that define the artifact (not its destination), with canonical
// string values so that rerunning from a manifest is a fixed point.
struct Manifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::optional<long long> seed;
    std::string timestamp;

    std::string to_json() const {
        std::string out = "{\"command\":\"" + json_escape(command) + "\",\"params\":{";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first)
                out += ",";
            first = false;
            out += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
        }
        out += "},\"seed\":";
        out += seed ? std::to_string(*seed) : "null";
        out += ",\"tool_version\":\"";
        out += kToolVersion;
        out += "\",\"timestamp\":\"" + json_escape(timestamp) + "\"}";
        return out;
    }
};

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!std::cout)
            throw std::runtime_error("write failed: standard output");
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
    if (!f)
        throw std::runtime_error("write failed: " + out_path);
}

std::string csv_preamble(const Manifest& m, const std::string& header) {
    return "# manifest: " + m.to_json() + "\n" + header + "\n";
}

struct GridSpec {
    double lo = 0.0, hi = 0.0;
    std::size_t count = 0;
    double at(std::size_t i) const {
        if (count == 1)
            return lo;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    const auto p1 = s.find(':');
    const auto p2 = s.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw CLI::ValidationError("--grid", "expected lo:hi:count");
    try {
        std::size_t used = 0;
        g.lo = std::stod(s.substr(0, p1), &used);
        g.hi = std::stod(s.substr(p1 + 1, p2 - p1 - 1), &used);
        const long long c = std::stoll(s.substr(p2 + 1), &used);
        if (c < 1)
            throw CLI::ValidationError("--grid", "count must be at least 1");
        g.count = static_cast<std::size_t>(c);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--grid", "expected lo:hi:count");
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError("--grid", "value out of range");
    }
    if (!(g.lo <= g.hi))
        throw CLI::ValidationError("--grid", "need lo <= hi");
    return g;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        const long long v = std::stoll(tok);
        if (v < 2)
            throw CLI::ValidationError("--sizes", "each size must be at least 2");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty())
        throw CLI::ValidationError("--sizes", "expected a comma-separated list");
    return out;
}

betaspec::EnsembleParams make_params(const std::string& ensemble, double beta, double gamma) {
    betaspec::EnsembleParams p;
    if (ensemble == "hermite")
        p.kind = betaspec::EnsembleKind::Hermite;
    else if (ensemble == "laguerre")
        p.kind = betaspec::EnsembleKind::Laguerre;
    else
        throw CLI::ValidationError("--ensemble", "must be hermite or laguerre");
    p.beta = beta;
    p.gamma = gamma;
    p.validate();
    return p;
}

betaspec::ContinuousLaw make_law(const std::string& name, double beta, double gamma, double u) {
    if (name == "semicircle")
        return betaspec::ContinuousLaw::semicircle(beta);
    if (name == "marchenko-pastur" || name == "mp")
        return betaspec::ContinuousLaw::marchenko_pastur(beta, gamma);
    if (name == "hermite-conditional")
        return betaspec::ContinuousLaw::hermite_conditional(u, beta);
    if (name == "laguerre-conditional")
        return betaspec::ContinuousLaw::laguerre_conditional(u, beta, gamma);
    throw CLI::ValidationError(
        "--law", "must be semicircle, marchenko-pastur, hermite-conditional or laguerre-conditional");
}

std::string canonical_law_name(const std::string& name) {
    return name == "mp" ? "marchenko-pastur" : name;
}

int dispatch(const std::vector<std::string>& args);

// Shared per-subcommand option state.
struct CommonOpts {
    std::string ensemble = "hermite";
    std::string law = "semicircle";
    double beta = 1.0;
    double gamma = 1.0;
    double u = 0.5;
    long long n = 0;
    long long seed = 0;
    long long root = 0;
    long long trials = 0;
    long long draws = 0;
    long long radius = 1;
    long long kmax = 4;
    double tol = 1e-8;
    double quad_tol = 1e-9;
    std::string grid;
    std::string sizes;
    std::string out;
    std::string timestamp;
    std::string manifest_path;
};

void add_out(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "Output path (default: standard output)");
    cmd->add_option("--timestamp", o.timestamp, "Timestamp string recorded in the manifest (default: empty, for reproducible output)");
}

int run_sample(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    if (o.n < 1)
        throw CLI::ValidationError("--n", "must be at least 1");
    betaspec::RngStream stream(static_cast<std::uint64_t>(o.seed));
    const betaspec::TridiagonalMatrix T = betaspec::sample(p, static_cast<std::size_t>(o.n), stream);

    Manifest m;
    m.command = "sample";
    m.params = {{"ensemble", o.ensemble}, {"beta", fmt17(o.beta)}, {"n", std::to_string(o.n)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.seed = o.seed;
    m.timestamp = o.timestamp;

    std::string out = "{\"manifest\":" + m.to_json() + ",\"ensemble\":\"" + o.ensemble +
                      "\",\"beta\":" + fmt17(o.beta);
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        out += ",\"gamma\":" + fmt17(o.gamma);
    out += ",\"n\":" + std::to_string(o.n) + ",\"diag\":[";
    for (std::size_t i = 0; i < T.diag.size(); ++i) {
        if (i)
            out += ",";
        out += fmt17(T.diag[i]);
    }
    out += "],\"offdiag\":[";
    for (std::size_t i = 0; i < T.offdiag.size(); ++i) {
        if (i)
            out += ",";
        out += fmt17(T.offdiag[i]);
    }
    out += "]}\n";
    write_output(out, o.out);
    return 0;
}

int run_eigen(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    if (o.n < 1)
        throw CLI::ValidationError("--n", "must be at least 1");
    betaspec::RngStream stream(static_cast<std::uint64_t>(o.seed));
    const betaspec::TridiagonalMatrix T = betaspec::sample(p, static_cast<std::size_t>(o.n), stream);
    const std::vector<double> lambda = betaspec::eigenvalues(T);

    Manifest m;
    m.command = "eigen";
    m.params = {{"ensemble", o.ensemble}, {"beta", fmt17(o.beta)}, {"n", std::to_string(o.n)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.seed = o.seed;
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "index,eigenvalue");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        out += std::to_string(i) + "," + fmt17(lambda[i]) + "\n";
    write_output(out, o.out);
    return 0;
}

int run_rootmeasure(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    if (o.n < 1)
        throw CLI::ValidationError("--n", "must be at least 1");
    if (o.root < 0 || o.root >= o.n)
        throw CLI::ValidationError("--root", "must lie in [0, n)");
    betaspec::RngStream stream(static_cast<std::uint64_t>(o.seed));
    const betaspec::TridiagonalMatrix T = betaspec::sample(p, static_cast<std::size_t>(o.n), stream);
    const betaspec::PointMeasure mu =
        betaspec::spectral_measure_at_root(T, static_cast<std::size_t>(o.root));

    Manifest m;
    m.command = "rootmeasure";
    m.params = {{"ensemble", o.ensemble},
                {"beta", fmt17(o.beta)},
                {"n", std::to_string(o.n)},
                {"root", std::to_string(o.root)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.seed = o.seed;
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "location,mass");
    for (const auto& atom : mu.atoms)
        out += fmt17(atom.location) + "," + fmt17(atom.mass) + "\n";
    write_output(out, o.out);
    return 0;
}

int run_density(const CommonOpts& o) {
    const betaspec::ContinuousLaw law = make_law(o.law, o.beta, o.gamma, o.u);
    const GridSpec grid = parse_grid(o.grid);

    Manifest m;
    m.command = "density";
    m.params = {{"law", canonical_law_name(o.law)}, {"beta", fmt17(o.beta)}, {"grid", o.grid}};
    if (law.family() == betaspec::LawFamily::MarchenkoPastur ||
        law.family() == betaspec::LawFamily::LaguerreConditional)
        m.params["gamma"] = fmt17(o.gamma);
    if (law.family() == betaspec::LawFamily::HermiteConditional ||
        law.family() == betaspec::LawFamily::LaguerreConditional)
        m.params["u"] = fmt17(o.u);
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "x,density");
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.at(i);
        out += fmt17(x) + "," + fmt17(law.density(x)) + "\n";
    }
    write_output(out, o.out);
    return 0;
}

int run_crosscheck(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    const betaspec::ContinuousLaw closed = p.kind == betaspec::EnsembleKind::Hermite
                                               ? betaspec::ContinuousLaw::semicircle(o.beta)
                                               : betaspec::ContinuousLaw::marchenko_pastur(o.beta, o.gamma);
    const long long points = o.n > 0 ? o.n : 100;

    Manifest m;
    m.command = "crosscheck";
    m.params = {{"ensemble", o.ensemble},
                {"beta", fmt17(o.beta)},
                {"n", std::to_string(points)},
                {"tol", fmt17(o.tol)},
                {"quad-tol", fmt17(o.quad_tol)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "x,closed_form,quadrature,abs_diff");
    const double lo = closed.support_lo();
    const double hi = closed.support_hi();
    double max_diff = 0.0;
    for (long long i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
        const double cf = closed.density(x);
        const double qd = betaspec::expected_density_numeric(p, x, o.quad_tol);
        const double diff = std::fabs(cf - qd);
        max_diff = std::max(max_diff, diff);
        out += fmt17(x) + "," + fmt17(cf) + "," + fmt17(qd) + "," + fmt17(diff) + "\n";
    }
    out += "# max_abs_diff: " + fmt17(max_diff) + "\n";
    write_output(out, o.out);
    if (!(max_diff <= o.tol)) {
        std::cerr << "crosscheck: max |closed - quadrature| = " << fmt17(max_diff)
                  << " exceeds tol " << fmt17(o.tol) << "\n";
        return 1;
    }
    return 0;
}

int run_converge(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    const std::vector<std::size_t> sizes = parse_sizes(o.sizes);
    if (o.trials < 1)
        throw CLI::ValidationError("--trials", "must be at least 1");
    betaspec::RngStream stream(static_cast<std::uint64_t>(o.seed));
    const betaspec::ConvergenceReport report =
        betaspec::convergence_sweep(p, sizes, static_cast<std::size_t>(o.trials), stream);

    Manifest m;
    m.command = "converge";
    m.params = {{"ensemble", o.ensemble},
                {"beta", fmt17(o.beta)},
                {"sizes", o.sizes},
                {"trials", std::to_string(o.trials)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.seed = o.seed;
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "n,trials,ks_mean,ks_std");
    for (const auto& row : report.rows)
        out += std::to_string(row.n) + "," + std::to_string(row.trials) + "," +
               fmt17(row.ks_mean) + "," + fmt17(row.ks_std) + "\n";
    write_output(out, o.out);
    return 0;
}

int run_ballstats(const CommonOpts& o) {
    const betaspec::EnsembleParams p = make_params(o.ensemble, o.beta, o.gamma);
    if (o.n < 2)
        throw CLI::ValidationError("--n", "must be at least 2");
    if (o.radius < 1)
        throw CLI::ValidationError("--r", "must be at least 1");
    if (o.draws < 1)
        throw CLI::ValidationError("--draws", "must be at least 1");
    betaspec::RngStream stream(static_cast<std::uint64_t>(o.seed));
    const std::vector<betaspec::BallSample> balls =
        betaspec::ball_statistics(p, static_cast<std::size_t>(o.n),
                                  static_cast<std::size_t>(o.radius),
                                  static_cast<std::size_t>(o.draws), stream);

    Manifest m;
    m.command = "ballstats";
    m.params = {{"ensemble", o.ensemble},
                {"beta", fmt17(o.beta)},
                {"n", std::to_string(o.n)},
                {"r", std::to_string(o.radius)},
                {"draws", std::to_string(o.draws)}};
    if (p.kind == betaspec::EnsembleKind::Laguerre)
        m.params["gamma"] = fmt17(o.gamma);
    m.seed = o.seed;
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "draw,root,root_loop_weight,root_edge_weight");
    for (std::size_t i = 0; i < balls.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(balls[i].root) + "," +
               fmt17(betaspec::root_loop_weight(balls[i])) + "," +
               fmt17(betaspec::root_edge_weight(balls[i])) + "\n";
    write_output(out, o.out);
    return 0;
}

int run_moments(const CommonOpts& o) {
    const betaspec::ContinuousLaw law = make_law(o.law, o.beta, o.gamma, o.u);
    if (o.kmax < 0)
        throw CLI::ValidationError("--kmax", "must be nonnegative");

    Manifest m;
    m.command = "moments";
    m.params = {{"law", canonical_law_name(o.law)},
                {"beta", fmt17(o.beta)},
                {"kmax", std::to_string(o.kmax)},
                {"quad-tol", fmt17(o.quad_tol)}};
    if (law.family() == betaspec::LawFamily::MarchenkoPastur ||
        law.family() == betaspec::LawFamily::LaguerreConditional)
        m.params["gamma"] = fmt17(o.gamma);
    if (law.family() == betaspec::LawFamily::HermiteConditional ||
        law.family() == betaspec::LawFamily::LaguerreConditional)
        m.params["u"] = fmt17(o.u);
    m.timestamp = o.timestamp;

    std::string out = csv_preamble(m, "k,moment");
    for (long long k = 0; k <= o.kmax; ++k)
        out += std::to_string(k) + "," + fmt17(law.moment(static_cast<unsigned>(k), o.quad_tol)) + "\n";
    write_output(out, o.out);
    return 0;
}

int run_rerun(const CommonOpts& o) {
    std::ifstream f(o.manifest_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open manifest source: " + o.manifest_path);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string content = buf.str();

    // Accept either a JSON artifact (with a "manifest" key), a CSV artifact
    // (leading "# manifest: {...}" line), or a bare manifest object.
    std::string manifest_json;
    if (content.rfind("# manifest: ", 0) == 0) {
        const auto eol = content.find('\n');
        manifest_json = content.substr(12, eol == std::string::npos ? std::string::npos : eol - 12);
    } else {
        manifest_json = content;
    }

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(manifest_json);
    } catch (const nlohmann::json::parse_error&) {
        throw std::runtime_error("rerun: no parseable manifest in " + o.manifest_path);
    }
    if (doc.contains("manifest"))
        doc = doc["manifest"];
    if (!doc.contains("command") || !doc.contains("params"))
        throw std::runtime_error("rerun: manifest lacks command/params");

    std::vector<std::string> args;
    args.push_back(doc["command"].get<std::string>());
    for (const auto& [k, v] : doc["params"].items()) {
        args.push_back("--" + k);
        args.push_back(v.get<std::string>());
    }
    if (doc.contains("seed") && !doc["seed"].is_null()) {
        args.push_back("--seed");
        args.push_back(std::to_string(doc["seed"].get<long long>()));
    }
    if (doc.contains("timestamp") && doc["timestamp"].is_string()) {
        const std::string ts = doc["timestamp"].get<std::string>();
        if (!ts.empty()) {
            args.push_back("--timestamp");
            args.push_back(ts);
        }
    }
    if (!o.out.empty()) {
        args.push_back("--out");
        args.push_back(o.out);
    }
    return dispatch(args);
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"beta-ensemble spectral measures and their Benjamini-Schramm limits"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* c_sample = app.add_subcommand("sample", "Sample a tridiagonal ensemble matrix (JSON)");
    c_sample->add_option("--ensemble", o.ensemble)->required();
    c_sample->add_option("--beta", o.beta)->required();
    c_sample->add_option("--gamma", o.gamma);
    c_sample->add_option("--n", o.n)->required();
    c_sample->add_option("--seed", o.seed)->required();
    add_out(c_sample, o);

    CLI::App* c_eigen = app.add_subcommand("eigen", "Eigenvalues of a sampled matrix (CSV)");
    c_eigen->add_option("--ensemble", o.ensemble)->required();
    c_eigen->add_option("--beta", o.beta)->required();
    c_eigen->add_option("--gamma", o.gamma);
    c_eigen->add_option("--n", o.n)->required();
    c_eigen->add_option("--seed", o.seed)->required();
    add_out(c_eigen, o);

    CLI::App* c_root = app.add_subcommand("rootmeasure", "Spectral measure at a root (CSV)");
    c_root->add_option("--ensemble", o.ensemble)->required();
    c_root->add_option("--beta", o.beta)->required();
    c_root->add_option("--gamma", o.gamma);
    c_root->add_option("--n", o.n)->required();
    c_root->add_option("--seed", o.seed)->required();
    c_root->add_option("--root", o.root);
    add_out(c_root, o);

    CLI::App* c_density = app.add_subcommand("density", "Law density on a grid (CSV)");
    c_density->add_option("--law", o.law)->required();
    c_density->add_option("--beta", o.beta)->required();
    c_density->add_option("--gamma", o.gamma);
    c_density->add_option("--u", o.u);
    c_density->add_option("--grid", o.grid)->required();
    add_out(c_density, o);

    CLI::App* c_cross = app.add_subcommand("crosscheck", "Expectation integral vs closed form (CSV report)");
    c_cross->add_option("--ensemble", o.ensemble)->required();
    c_cross->add_option("--beta", o.beta)->required();
    c_cross->add_option("--gamma", o.gamma);
    c_cross->add_option("--n", o.n, "Number of interior grid points (default 100)");
    c_cross->add_option("--tol", o.tol, "Acceptance threshold on max |closed - quadrature|");
    c_cross->add_option("--quad-tol", o.quad_tol);
    add_out(c_cross, o);

    CLI::App* c_conv = app.add_subcommand("converge", "KS convergence sweep over sizes (CSV)");
    c_conv->add_option("--ensemble", o.ensemble)->required();
    c_conv->add_option("--beta", o.beta)->required();
    c_conv->add_option("--gamma", o.gamma);
    c_conv->add_option("--sizes", o.sizes)->required();
    c_conv->add_option("--trials", o.trials)->required();
    c_conv->add_option("--seed", o.seed)->required();
    add_out(c_conv, o);

    CLI::App* c_ball = app.add_subcommand("ballstats", "Root-ball weight statistics (CSV)");
    c_ball->add_option("--ensemble", o.ensemble)->required();
    c_ball->add_option("--beta", o.beta)->required();
    c_ball->add_option("--gamma", o.gamma);
    c_ball->add_option("--n", o.n)->required();
    c_ball->add_option("--r", o.radius)->required();
    c_ball->add_option("--draws", o.draws)->required();
    c_ball->add_option("--seed", o.seed)->required();
    add_out(c_ball, o);

    CLI::App* c_mom = app.add_subcommand("moments", "Law moments by quadrature (CSV)");
    c_mom->add_option("--law", o.law)->required();
    c_mom->add_option("--beta", o.beta)->required();
    c_mom->add_option("--gamma", o.gamma);
    c_mom->add_option("--u", o.u);
    c_mom->add_option("--kmax", o.kmax);
    c_mom->add_option("--quad-tol", o.quad_tol);
    add_out(c_mom, o);

    CLI::App* c_rerun = app.add_subcommand("rerun", "Re-execute a command from a recorded manifest");
    c_rerun->add_option("--manifest", o.manifest_path)->required();
    c_rerun->add_option("--out", o.out, "Destination override for the regenerated artifact");

    std::vector<const char*> argv;
    argv.push_back("betaspec");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (c_sample->parsed())
        return run_sample(o);
    if (c_eigen->parsed())
        return run_eigen(o);
    if (c_root->parsed())
        return run_rootmeasure(o);
    if (c_density->parsed())
        return run_density(o);
    if (c_cross->parsed())
        return run_crosscheck(o);
    if (c_conv->parsed())
        return run_converge(o);
    if (c_ball->parsed())
        return run_ballstats(o);
    if (c_mom->parsed())
        return run_moments(o);
    if (c_rerun->parsed())
        return run_rerun(o);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return dispatch(args);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
