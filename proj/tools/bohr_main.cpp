// bohr: catalog, solver, verifier and figure emitter for the Bohr-radius
// instances of the starlike log-harmonic family.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 numeric or solver error, 4 I/O error.

#include "bohr/catalog.hpp"
#include "bohr/figures.hpp"
#include "bohr/problems.hpp"
#include "bohr/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::string num(double x, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

struct Cli {
    std::string id;
    std::string figure_id;
    std::string out_path;
    std::string format;
    double a = 0.5;
    double beta = 0.0;
    double alpha = 1.0;
    double wedge_beta = 0.0;
    double precision = bohr::kDefaultSolverTol;
    double r_max = 0.0;
    int samples = 256;
    int grid_points = 1000;
    int count = 200;
    std::uint64_t seed = 1;
    std::size_t order = 64;
    bool log_modulus = false;
};

bohr::ProblemParams params_of(const Cli& cli) {
    bohr::ProblemParams p;
    p.a = cli.a;
    p.beta = cli.beta;
    p.alpha = cli.alpha;
    p.wedge_beta = cli.wedge_beta;
    return p;
}

json params_json(const std::string& id, const bohr::ProblemParams& p) {
    json j = json::object();
    if (id == "classical_phi") j["a"] = p.a;
    if (id == "subord_beta") j["beta"] = p.beta;
    if (id == "wedge" || id == "wedge_improved") j["alpha"] = p.alpha;
    if (id == "wedge_improved") j["beta"] = p.wedge_beta;
    return j;
}

int run_list() {
    for (const std::string& id : bohr::list_problems()) std::cout << id << "\n";
    return kExitOk;
}

int run_solve(const Cli& cli) {
    const bohr::ProblemParams params = params_of(cli);
    const bohr::RadiusProblem& prob = bohr::problem(cli.id);

    double root = std::numeric_limits<double>::quiet_NaN();
    double bracket_width = 0.0;
    std::optional<double> deviation;
    bool degenerate = false;
    try {
        const bohr::RadiusResult rr = bohr::solve_radius(cli.id, params, cli.precision);
        root = rr.computed_root;
        bracket_width = rr.bracket_width;
        deviation = rr.deviation;
    } catch (const bohr::SolverError&) {
        if (prob.has_closed_form && bohr::closed_form_radius(cli.id, params) <= 0.0) {
            degenerate = true; // radius formula <= 0: no root to bracket
        } else {
            throw;
        }
    }
    std::optional<double> closed;
    if (prob.has_closed_form) closed = bohr::closed_form_radius(cli.id, params);

    if (cli.format == "json") {
        json j;
        j["schema"] = "bohr-report/1";
        j["id"] = cli.id;
        j["params"] = params_json(cli.id, params);
        j["root"] = degenerate ? json(nullptr) : json(root);
        j["bracket_width"] = bracket_width;
        j["closed_form"] = closed ? json(*closed) : json(nullptr);
        j["paper_value"] = prob.paper_value ? json(*prob.paper_value) : json(nullptr);
        j["deviation"] = deviation ? json(*deviation) : json(nullptr);
        j["note"] = prob.note;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "id: " << cli.id << "\n";
    if (degenerate) {
        std::cout << "root: none (radius degenerates to <= 0)\n";
    } else {
        std::cout << "root: " << num(root) << "\n";
        std::cout << "bracket_width: " << num(bracket_width, "%.3g") << "\n";
    }
    std::cout << "closed_form: " << (closed ? num(*closed) : "(none)") << "\n";
    std::cout << "paper_value: " << (prob.paper_value ? num(*prob.paper_value, "%.6g") : "(none)")
              << "\n";
    std::cout << "deviation: " << (deviation ? num(*deviation, "%.6g") : "(none)") << "\n";
    if (!prob.note.empty()) std::cout << "note: " << prob.note << "\n";
    return kExitOk;
}

int run_verify(const Cli& cli) {
    bohr::VerifyOptions opts;
    opts.grid_points = cli.grid_points;
    opts.order = cli.order;
    opts.seed = cli.seed;
    opts.fuzz_count = cli.count;

    std::vector<bohr::VerificationReport> reports;
    if (cli.id == "all") {
        reports = bohr::verify_all(opts);
    } else {
        reports = bohr::verify_problem(cli.id, params_of(cli), opts);
    }

    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;

    if (cli.format == "json") {
        json doc;
        doc["schema"] = "bohr-report/1";
        doc["passed"] = all_passed;
        json arr = json::array();
        for (const auto& r : reports) {
            json j;
            j["id"] = r.check_id;
            j["passed"] = r.passed;
            j["grid_size"] = r.grid_size;
            j["worst_margin"] = r.worst_margin;
            j["tolerance"] = r.tolerance;
            j["notes"] = r.notes;
            arr.push_back(std::move(j));
        }
        doc["reports"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_id
                      << "  worst_margin=" << num(r.worst_margin, "%.6g");
            for (const auto& n : r.notes) std::cout << "  | " << n;
            std::cout << "\n";
        }
        std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED") << " ("
                  << reports.size() << " reports)\n";
    }
    return all_passed ? kExitOk : kExitVerifyFail;
}

int run_figure(const Cli& cli) {
    bohr::FigureSpec spec;
    spec.figure_id = cli.figure_id;
    spec.samples = cli.samples;
    spec.r_max = cli.r_max;
    spec.format = cli.format == "svg" ? bohr::FigureFormat::Svg : bohr::FigureFormat::Csv;
    spec.log_modulus = cli.log_modulus;
    bohr::emit_figure(spec, cli.out_path);
    std::cerr << "wrote " << cli.out_path << "\n";
    return kExitOk;
}

int run_table(const Cli& cli) {
    bohr::TableFormat format = bohr::TableFormat::Json;
    if (cli.format == "md") format = bohr::TableFormat::Md;
    if (cli.format == "csv") format = bohr::TableFormat::Csv;
    bohr::emit_summary_table(format, cli.out_path);
    std::cerr << "wrote " << cli.out_path << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr radius catalog, verifier and figure emitter"};
    app.require_subcommand(1);
    Cli cli;

    auto* radii = app.add_subcommand("radii", "solve and list radius problems");
    radii->require_subcommand(1);
    radii->add_subcommand("list", "print catalog problem ids");
    auto* solve = radii->add_subcommand("solve", "solve one radius problem");
    solve->add_option("id", cli.id, "problem id (see `radii list`)")->required();
    solve->add_option("--a", cli.a, "parameter a for classical_phi, in [0,1)");
    solve->add_option("--beta", cli.beta, "parameter beta for subord_beta, in [0,1/4)");
    solve->add_option("--alpha", cli.alpha, "wedge opening parameter, in [1,2]");
    solve->add_option("--wedge-beta", cli.wedge_beta, "improvement weight, in [0,2)");
    solve->add_option("--precision", cli.precision, "bisection bracket tolerance");
    solve->add_option("--format", cli.format, "text|json")->default_str("text");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("id", cli.id, "problem id or 'all'")->required();
    verify->add_option("--grid-points", cli.grid_points, "sweep grid size");
    verify->add_option("--order", cli.order, "series truncation order");
    verify->add_option("--seed", cli.seed, "fuzz seed");
    verify->add_option("--count", cli.count, "fuzz sample count");
    verify->add_option("--a", cli.a, "parameter a for classical_phi");
    verify->add_option("--beta", cli.beta, "parameter beta for subord_beta");
    verify->add_option("--alpha", cli.alpha, "wedge opening parameter");
    verify->add_option("--wedge-beta", cli.wedge_beta, "improvement weight");
    verify->add_option("--format", cli.format, "text|json")->default_str("text");

    auto* figure = app.add_subcommand("figure", "emit a figure data file");
    figure->add_option("figure-id", cli.figure_id, "figure id")->required();
    figure->add_option("--out", cli.out_path, "output path")->required();
    figure->add_option("--format", cli.format, "csv|svg")->default_str("csv");
    figure->add_option("--samples", cli.samples, "sample count (>= 16)");
    figure->add_option("--r-max", cli.r_max, "top of the radial range (0 = default)");
    figure->add_flag("--log-modulus", cli.log_modulus, "log-scale disk image moduli");

    auto* table = app.add_subcommand("table", "emit the radius summary table");
    table->add_option("--out", cli.out_path, "output path")->required();
    table->add_option("--format", cli.format, "json|md|csv")->default_str("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (radii->parsed()) {
            if (radii->get_subcommand("list")->parsed()) return run_list();
            if (cli.format.empty()) cli.format = "text";
            if (cli.format != "text" && cli.format != "json") {
                std::cerr << "unknown --format: " << cli.format << "\n";
                return kExitUsage;
            }
            return run_solve(cli);
        }
        if (verify->parsed()) {
            if (cli.id != "all" && !bohr::is_problem(cli.id)) {
                std::cerr << "unknown problem id: " << cli.id << "\n";
                return kExitUsage;
            }
            if (cli.format.empty()) cli.format = "text";
            if (cli.format != "text" && cli.format != "json") {
                std::cerr << "unknown --format: " << cli.format << "\n";
                return kExitUsage;
            }
            return run_verify(cli);
        }
        if (figure->parsed()) {
            if (cli.format.empty()) cli.format = "csv";
            if (cli.format != "csv" && cli.format != "svg") {
                std::cerr << "unknown --format: " << cli.format << "\n";
                return kExitUsage;
            }
            return run_figure(cli);
        }
        if (table->parsed()) {
            if (cli.format.empty()) cli.format = "json";
            if (cli.format != "json" && cli.format != "md" && cli.format != "csv") {
                std::cerr << "unknown --format: " << cli.format << "\n";
                return kExitUsage;
            }
            return run_table(cli);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const bohr::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const bohr::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
