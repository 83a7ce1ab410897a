#include "entm/css_inverse.hpp"
#include "entm/extremal.hpp"
#include "entm/families.hpp"
#include "entm/gh_solver.hpp"
#include "entm/measures.hpp"
#include "entm/scan.hpp"
#include "entm/state_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using entm::format_g12;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ENTM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw entm::ParseError("ENTM_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

json load_json_arg(const std::string& arg) {
    // Inline JSON starts with '{'; anything else is a file path.
    if (!arg.empty() && arg.front() == '{') {
        try {
            return json::parse(arg);
        } catch (const json::exception& e) {
            throw entm::ParseError(std::string("malformed JSON: ") + e.what());
        }
    }
    std::ifstream in(arg);
    if (!in) {
        throw entm::IoError("cannot open file: " + arg);
    }
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw entm::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

int cmd_measures(const std::string& path, int restarts, std::uint64_t seed) {
    const entm::DensityMatrix rho = entm::density_from_json(load_json_arg(path));
    const entm::CssPair pair = entm::ree_numeric(rho, restarts, seed);
    json out;
    out["negativity"] = entm::negativity(rho);
    out["log_negativity"] = entm::log_negativity(rho);
    out["concurrence"] = entm::concurrence(rho);
    out["entanglement_of_formation"] = entm::entanglement_of_formation(rho);
    out["ree"] = pair.ree;
    out["css"] = entm::matrix_to_json(pair.sigma.mat());
    out["diagnostics"] = {{"iterations", pair.iterations},
                          {"restarts", pair.restarts},
                          {"simplex_spread", pair.spread}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_family(const std::string& arg) {
    const entm::FamilyPoint fp = entm::family_point_from_json(load_json_arg(arg));
    const entm::DensityMatrix rho = entm::family_state(fp);
    json out = entm::family_point_to_json(fp);
    out["state"] = entm::matrix_to_json(rho.mat());
    out["negativity"] = entm::negativity(rho);
    out["concurrence"] = entm::concurrence(rho);
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_curves(int grid, const std::string& out_path) {
    const entm::CurveTable table = entm::compute_curves(grid);
    if (out_path.empty() || out_path == "-") {
        entm::write_curves_csv(table, std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw entm::IoError("cannot open output file: " + out_path);
    }
    entm::write_curves_csv(table, out);
    return 0;
}

int cmd_crossing() {
    const double n_y = entm::crossing_negativity();
    json out;
    out["N_Y"] = n_y;
    out["E_at_crossing"] = entm::ree_pure(n_y);
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_maxgap() {
    const auto [n_prime, gap] = entm::max_gap();
    json out;
    out["N_prime"] = n_prime;
    out["gap"] = gap;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_scan(int rank, int n, const std::string& method, std::uint64_t seed, int restarts,
             int threads, const std::string& out_path) {
    const auto records =
        entm::scan_records(rank, n, entm::method_from_name(method), seed, restarts, threads);
    if (out_path.empty() || out_path == "-") {
        entm::write_scan_csv(records, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw entm::IoError("cannot open output file: " + out_path);
        }
        entm::write_scan_csv(records, out);
    }
    std::size_t failed = 0;
    for (const auto& r : records) {
        if (r.status != "ok") ++failed;
    }
    if (failed > 0) {
        std::cerr << failed << " of " << records.size() << " records flagged\n";
    }
    return 0;
}

int cmd_bounds(const std::string& path, double tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw entm::IoError("cannot open file: " + path);
    }
    const auto records = entm::read_scan_csv(in);
    const entm::BoundsReport report = entm::check_bounds(records, tolerance);
    if (report.records == 0) {
        std::cerr << "warning: no records in " << path << '\n';
    }
    json out;
    out["records"] = report.records;
    out["checked"] = report.checked;
    out["violations"] = report.violations;
    out["tolerance"] = tolerance;
    std::cout << out.dump(2) << '\n';
    return report.violations == 0 ? 0 : 1;
}

int cmd_extremal(const std::string& rho_path, const std::string& sigma_path) {
    const entm::DensityMatrix rho = entm::density_from_json(load_json_arg(rho_path));
    const entm::DensityMatrix sigma = entm::density_from_json(load_json_arg(sigma_path));
    const entm::ExtremalReport rep = entm::check_extremal_rank2(rho, sigma);
    json out;
    out["l"] = rep.l;
    out["residual_offdiag"] = rep.residual_offdiag;
    out["residual_diag"] = rep.residual_diag;
    out["lhs_rhs_zero"] = rep.lhs_rhs_zero;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_distill() {
    const entm::DistillReport rep = entm::distill_example();
    json out;
    out["p"] = rep.p;
    out["negativity_nominal"] = rep.n_nominal;
    out["negativity_exact"] = rep.n_exact;
    out["ed_lower_bound"] = rep.ed_lower_bound;
    out["ree_pure_nominal"] = rep.ree_pure_nominal;
    out["ree_pure_exact"] = rep.ree_pure_exact;
    out["bound_exceeds_pure"] = rep.bound_exceeds_pure;
    std::cout << out.dump(2) << '\n';
    return rep.bound_exceeds_pure ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit entanglement measures toolkit"};
    app.require_subcommand(1);

    std::string state_path;
    std::string family_arg;
    std::string out_path;
    std::string method = "direct";
    std::string rho_path, sigma_path;
    std::string csv_path;
    int grid = 200;
    int rank = 4;
    int n = 100;
    int restarts = 8;
    int threads = 0;
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* measures = app.add_subcommand(
        "measures", "Negativity, concurrence, formation and REE of a state (JSON file or inline)");
    measures->add_option("state", state_path, "state JSON: {\"re\": 4x4, \"im\": 4x4}")
        ->required();
    measures->add_option("--restarts", restarts, "REE solver restarts (default 8)");
    measures->add_option("--seed", seed, "solver seed")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* family = app.add_subcommand(
        "family", "Construct a named family state: {\"family\": ..., \"params\": {...}}");
    family->add_option("point", family_arg, "FamilyPoint JSON (file or inline)")->required();

    auto* curves = app.add_subcommand("curves", "REE-vs-negativity curve table as CSV");
    curves->add_option("--grid", grid, "number of grid points (default 200)");
    curves->add_option("--out", out_path, "output CSV path (default stdout)");

    app.add_subcommand("crossing", "Locate N_Y where the Horodecki and pure REE curves cross");
    app.add_subcommand("maxgap", "Maximum of E_H - E_P and its location");

    auto* scan = app.add_subcommand("scan", "Monte-Carlo scan of random states as CSV");
    scan->add_option("--rank", rank, "state rank 2..4")->required();
    scan->add_option("--n", n, "number of samples")->required();
    scan->add_option("--method", method, "direct|inverse (default direct)");
    scan->add_option("--seed", seed, "scan seed (default ENTM_SEED or 12345)")
        ->each([&](const std::string&) { seed_given = true; });
    scan->add_option("--restarts", restarts, "REE solver restarts for the direct method");
    scan->add_option("--threads", threads, "worker threads (default: hardware)");
    scan->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "Check scan records against the REE band");
    bounds->add_option("csv", csv_path, "scan CSV path")->required();
    bounds->add_option("--tolerance", tolerance, "band tolerance (default 1e-6)");

    auto* extremal = app.add_subcommand("extremal", "Rank-2 extremality residuals for (rho, sigma)");
    extremal->add_option("rho", rho_path, "entangled state JSON")->required();
    extremal->add_option("sigma", sigma_path, "candidate CSS JSON")->required();

    app.add_subcommand("distill", "Distillation bound example at p = 0.37");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (!seed_given) {
            seed = default_seed();
        }
        if (measures->parsed()) return cmd_measures(state_path, restarts, seed);
        if (family->parsed()) return cmd_family(family_arg);
        if (curves->parsed()) return cmd_curves(grid, out_path);
        if (app.got_subcommand("crossing")) return cmd_crossing();
        if (app.got_subcommand("maxgap")) return cmd_maxgap();
        if (scan->parsed()) return cmd_scan(rank, n, method, seed, restarts, threads, out_path);
        if (bounds->parsed()) return cmd_bounds(csv_path, tolerance);
        if (extremal->parsed()) return cmd_extremal(rho_path, sigma_path);
        if (app.got_subcommand("distill")) return cmd_distill();
    } catch (const entm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const entm::InvalidState& e) {
        std::cerr << "invalid state: " << e.what() << '\n';
        return 1;
    } catch (const entm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
