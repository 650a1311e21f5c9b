// Command-line front end: runs a verification suite and prints a JSON
// report to stdout. Exit status: 0 all checks pass, 1 some check failed,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heckelib/suites.hpp"

namespace {

std::vector<long long> parse_q_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    if (out.empty()) throw hecke::error("empty q list");
    return out;
}

hecke::CohomologyClass parse_gamma(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) entries.push_back(std::stoi(item));
    if (entries.empty() || entries.size() % 2 != 0)
        throw hecke::error("gamma must be 2g comma-separated integers");
    const int g = static_cast<int>(entries.size()) / 2;
    Eigen::VectorXi a(g), b(g);
    for (int i = 0; i < g; ++i) {
        a[i] = entries[static_cast<std::size_t>(i)];
        b[i] = entries[static_cast<std::size_t>(g + i)];
    }
    return {a, b};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Verification suites for Hecke operators on complex tori: closed-form "
        "eigenfunctions, flat connections and opers, torus bundles, the finite "
        "Hecke algebra, Hecke-fiber catalogs, and the fundamental-group "
        "character audit."};

    std::string suite;
    app.add_option("suite", suite, "one of: elliptic, jacobian, connections, torus, "
                                   "finite-hecke, fiber, biject, all")
        ->required();

    std::string tau_text = "0+1i";
    std::string omega_path;
    std::string gamma_text;
    std::string q_text = "2,3,5,7,11";
    int grid = 64;
    int max_mode = 3;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string csv_path;
    std::string json_path;

    app.add_option("--tau", tau_text, "elliptic modulus, e.g. 0.3+1.2i");
    app.add_option("--omega", omega_path, "period matrix JSON file (jacobian suite)");
    app.add_option("--gamma", gamma_text,
                   "restrict the elliptic suite to one class: m,n");
    app.add_option("--q", q_text, "comma-separated primes for finite-hecke");
    app.add_option("--grid", grid, "grid resolution N per coordinate");
    app.add_option("--max-mode", max_mode, "mode box half-width");
    app.add_option("--seed", seed, "RNG seed (reports are reproducible per seed)");
    app.add_option("--samples", samples, "random sample count per property");
    app.add_option("--csv", csv_path, "write the suite's data table as CSV");
    app.add_option("--json", json_path, "also write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace hecke;
        suites::SuiteReport report;

        if (suite == "elliptic") {
            std::optional<CohomologyClass> only;
            if (!gamma_text.empty()) only = parse_gamma(gamma_text);
            report = suites::run_elliptic_suite(io::parse_complex(tau_text), max_mode,
                                                grid, seed, samples, csv_path, only);
        } else if (suite == "jacobian") {
            std::optional<RiemannMatrix> lattice;
            if (!omega_path.empty()) lattice = io::load_period_matrix(omega_path);
            report = suites::run_jacobian_suite(seed, samples, lattice, grid);
        } else if (suite == "connections") {
            report = suites::run_connections_suite(seed, samples, csv_path);
        } else if (suite == "torus") {
            report = suites::run_torus_suite(seed, samples);
        } else if (suite == "finite-hecke") {
            report = suites::run_finite_hecke_suite(parse_q_list(q_text));
        } else if (suite == "fiber") {
            report = suites::run_fiber_suite(seed);
        } else if (suite == "biject") {
            report = suites::run_biject_suite();
        } else if (suite == "all") {
            report = suites::run_all_suites(seed, samples);
        } else {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }

        const auto j = suites::report_to_json(report);
        std::cout << j.dump(2) << "\n";
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << j.dump(2) << "\n";
        }
        return report.overall_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
