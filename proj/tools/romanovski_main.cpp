#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "romanovski/qfamily.hpp"
#include "romanovski/quadrature.hpp"
#include "romanovski/serialize.hpp"
#include "romanovski/verify.hpp"

namespace {

using namespace romanovski;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

Params parse_params(const std::string& alpha, const std::string& a) {
    return Params{Rational::parse(alpha), Rational::parse(a)};
}

int cmd_table(const std::string& alpha, const std::string& a, unsigned max_degree,
              const std::string& format, const std::string& out_path) {
    const QFamily fam = three_term_q(parse_params(alpha, a), max_degree);
    std::ostringstream body;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : fam.polys) rows.push_back(poly_to_json(p));
        body << rows.dump() << "\n";
    } else {
        for (std::size_t nu = 0; nu < fam.polys.size(); ++nu)
            body << poly_csv_row(nu, fam.polys[nu]) << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
        return 0;
    }
    std::ofstream out(out_path);
    out << body.str();
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    return 0;
}

int cmd_verify(const std::string& suite, unsigned max_degree, unsigned trials,
               std::uint64_t seed) {
    VerifyOptions options;
    options.max_degree = max_degree;
    options.trials = trials;
    options.seed = seed;
    bool ok = true;
    for (const auto& report : run_suites(suite, options)) {
        print_report(std::cout, report);
        std::fprintf(stderr, "suite %s wall time %.3fs\n", report.suite.c_str(),
                     report.wall_seconds);
        ok = ok && report.passed();
    }
    return ok ? 0 : 1;
}

int cmd_ortho(const std::string& alpha, const std::string& a, unsigned mu, unsigned nu,
              bool half_power) {
    const QuadResult r = ortho_integral(parse_params(alpha, a), mu, nu, half_power);
    std::cout << format_double(r.value) << " " << format_double(r.abs_error_estimate) << " "
              << r.nodes_used << "\n";
    return 0;
}

int cmd_scan(const std::string& kind, const std::string& alpha, const std::string& a,
             double y_min, double y_max, unsigned steps, const std::string& out_path) {
    const Params params = parse_params(alpha, a);
    std::vector<double> grid(steps);
    for (unsigned i = 0; i < steps; ++i)
        grid[i] = y_min + (y_max - y_min) * i / (steps - 1);

    std::vector<QuadResult> results;
    if (kind == "i0")
        results = i0_scan(params.a, grid);
    else if (kind == "i1")
        results = i1_scan(params, grid);
    else
        results = i_scan(params, grid);

    std::ofstream out(out_path);
    out << "y,value,error_estimate,nodes\n";
    for (unsigned i = 0; i < steps; ++i)
        out << format_double(grid[i]) << "," << format_double(results[i].value) << ","
            << format_double(results[i].abs_error_estimate) << "," << results[i].nodes_used
            << "\n";
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }

    if (kind == "i0") {
        const double reference = i0_reference(params.a.to_double());
        double max_dev = 0.0;
        for (const auto& r : results) max_dev = std::max(max_dev, std::abs(r.value - reference));
        std::cout << "reference " << format_double(reference) << " max deviation "
                  << format_double(max_dev) << "\n";
    } else {
        double max_asym = 0.0;
        for (unsigned i = 0; i < steps; ++i) {
            const unsigned j = steps - 1 - i;
            if (std::abs(grid[i] + grid[j]) < 1e-12)
                max_asym = std::max(max_asym, std::abs(results[i].value - results[j].value));
        }
        std::cout << "max asymmetry over mirrored grid points " << format_double(max_asym)
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Romanovski complementary polynomials: exact tables, identity "
                 "verification, orthogonality integrals"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::string alpha = "0", a = "0", format = "csv", out_path, suite = "all", kind;
    unsigned max_degree = 8, trials = 10, mu = 0, nu = 0, steps = 2;
    std::uint64_t seed = 1;
    double y_min = 0.0, y_max = 0.0;
    bool half_power = false;

    auto* table = app.add_subcommand("table", "print Q_0..Q_max coefficients");
    table->add_option("--alpha", alpha, "alpha as integer or p/q");
    table->add_option("--a", a, "a as integer or p/q");
    table->add_option("--max-degree", max_degree, "highest degree")->capture_default_str();
    table->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "output file (default stdout)");
    table->callback([&] { action = [&] { return cmd_table(alpha, a, max_degree, format, out_path); }; });

    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(allowed));
    verify->add_option("--max-degree", max_degree, "degree bound")->capture_default_str();
    verify->add_option("--trials", trials, "random parameter trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->callback([&] { action = [&] { return cmd_verify(suite, max_degree, trials, seed); }; });

    auto* ortho = app.add_subcommand("ortho", "one orthogonality integral");
    ortho->add_option("--alpha", alpha, "alpha as integer or p/q");
    ortho->add_option("--a", a, "a as integer or p/q");
    ortho->add_option("--mu", mu, "first index")->required();
    ortho->add_option("--nu", nu, "second index")->required();
    ortho->add_flag("--half-power", half_power, "extra sqrt(sigma) in the numerator");
    ortho->callback([&] { action = [&] { return cmd_ortho(alpha, a, mu, nu, half_power); }; });

    auto* scan = app.add_subcommand("scan", "generating-function integral scan to CSV");
    scan->add_option("--kind", kind, "i0, i1 or i")
        ->check(CLI::IsMember({"i0", "i1", "i"}))
        ->required();
    scan->add_option("--alpha", alpha, "alpha as integer or p/q");
    scan->add_option("--a", a, "a as integer or p/q");
    scan->add_option("--y-min", y_min, "grid start")->required();
    scan->add_option("--y-max", y_max, "grid end")->required();
    scan->add_option("--steps", steps, "grid points (>= 2)")->check(CLI::Range(2u, 1000000u));
    scan->add_option("--out", out_path, "CSV output path")->required();
    scan->callback([&] {
        action = [&] { return cmd_scan(kind, alpha, a, y_min, y_max, steps, out_path); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
}
