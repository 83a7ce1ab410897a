#include "entm/scan.hpp"

#include "entm/css_inverse.hpp"
#include "entm/families.hpp"
#include "entm/gh_solver.hpp"
#include "entm/measures.hpp"
#include "entm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace entm {

const char* method_name(ScanMethod m) {
    return m == ScanMethod::Direct ? "direct" : "inverse";
}

ScanMethod method_from_name(const std::string& name) {
    if (name == "direct") return ScanMethod::Direct;
    if (name == "inverse") return ScanMethod::Inverse;
    throw ParseError("unknown scan method '" + name + "'");
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CurveTable compute_curves(int n_grid) {
    if (n_grid < 2) {
        throw DomainError("curves: grid must have at least 2 points");
    }
    CurveTable t;
    t.grid.reserve(n_grid);
    const double lo = 1e-3;
    const double hi = 1.0 - 1e-3;
    for (int i = 0; i < n_grid; ++i) {
        const double n = lo + (hi - lo) * static_cast<double>(i) / (n_grid - 1);
        const auto [p_best, e_best] = p_opt(n);
        t.grid.push_back(n);
        t.e_pure.push_back(ree_pure(n));
        t.e_horodecki.push_back(ree_horodecki(n));
        t.e_bd.push_back(ree_bell_diagonal(n));
        t.e_ogh.push_back(e_best);
        t.p_opt.push_back(p_best);
    }
    return t;
}

void write_curves_csv(const CurveTable& table, std::ostream& out) {
    out << "N,E_P,E_H,E_BD,E_OGH,p_opt\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
        out << format_g12(table.grid[i]) << ',' << format_g12(table.e_pure[i]) << ','
            << format_g12(table.e_horodecki[i]) << ',' << format_g12(table.e_bd[i]) << ','
            << format_g12(table.e_ogh[i]) << ',' << format_g12(table.p_opt[i]) << '\n';
    }
}

double crossing_negativity() {
    return bisect_root([](double n) { return ree_horodecki(n) - ree_pure(n); }, 0.1, 0.9,
                       1e-10);
}

std::pair<double, double> max_gap() {
    const double n_y = crossing_negativity();
    return golden_max([](double n) { return ree_horodecki(n) - ree_pure(n); }, 1e-4, n_y,
                      1e-10);
}

namespace {

ScanRecord make_record(int rank, ScanMethod method, std::uint64_t record_seed, int restarts) {
    ScanRecord rec;
    rec.rank = rank;
    rec.seed = record_seed;
    rec.method = method;
    rec.solver_restarts = method == ScanMethod::Direct ? restarts : 0;
    try {
        if (method == ScanMethod::Direct) {
            const DensityMatrix rho = random_density(rank, record_seed);
            rec.negativity = negativity(rho);
            rec.concurrence = concurrence(rho);
            rec.ree = ree_numeric(rho, restarts, record_seed).ree;
        } else {
            const BoundaryCss b = sample_boundary(record_seed);
            const double xm = x_max(b);
            double x = xm;
            if (rank == 4) {
                Rng rng(mix_seed(record_seed, 0x78u));
                x = (1.0 - rng.uniform()) * xm;  // uniform in (0, x_max]
            }
            rec.x = x;
            rec.has_x = true;
            const DensityMatrix rho = rho_from_css(b, x);
            rec.negativity = negativity(rho);
            rec.concurrence = concurrence(rho);
            rec.ree = ree_inverse(b, x);
        }
    } catch (const Error& e) {
        rec.status = std::string("error: ") + e.what();
        rec.ree = std::nan("");
    }
    return rec;
}

}  // namespace

std::vector<ScanRecord> scan_records(int rank, int n, ScanMethod method, std::uint64_t seed,
                                     int restarts, int threads) {
    if (rank < 2 || rank > 4) {
        throw DomainError("scan: rank must be 2, 3 or 4");
    }
    if (method == ScanMethod::Inverse && rank == 2) {
        throw DomainError("scan: the inverse construction cannot produce rank-2 states");
    }
    if (n < 1) {
        throw DomainError("scan: need at least one sample");
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min(threads, n);

    std::vector<ScanRecord> records(n);
    auto worker = [&](int first) {
        for (int i = first; i < n; i += threads) {
            records[i] = make_record(rank, method, mix_seed(seed, static_cast<std::uint64_t>(i)),
                                     restarts);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return records;
}

void write_scan_csv(const std::vector<ScanRecord>& records, std::ostream& out) {
    out << "rank,seed,method,negativity,concurrence,ree,x,solver_restarts,status\n";
    for (const ScanRecord& r : records) {
        out << r.rank << ',' << r.seed << ',' << method_name(r.method) << ','
            << format_g12(r.negativity) << ',' << format_g12(r.concurrence) << ','
            << format_g12(r.ree) << ',' << (r.has_x ? format_g12(r.x) : std::string{}) << ','
            << r.solver_restarts << ',' << r.status << '\n';
    }
}

std::vector<ScanRecord> read_scan_csv(std::istream& in) {
    std::vector<ScanRecord> records;
    std::string line;
    if (!std::getline(in, line)) {
        return records;  // empty input: zero records
    }
    if (line.rfind("rank,", 0) != 0) {
        throw ParseError("scan CSV: missing header line");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        // status may contain commas; merge the tail
        if (fields.size() > 9) {
            for (std::size_t i = 9; i < fields.size(); ++i) {
                fields[8] += "," + fields[i];
            }
            fields.resize(9);
        }
        if (line.back() == ',') {
            fields.push_back("");
        }
        if (fields.size() != 9) {
            throw ParseError("scan CSV: malformed line " + std::to_string(line_no));
        }
        try {
            ScanRecord r;
            r.rank = std::stoi(fields[0]);
            r.seed = std::stoull(fields[1]);
            r.method = method_from_name(fields[2]);
            r.negativity = std::stod(fields[3]);
            r.concurrence = std::stod(fields[4]);
            r.ree = std::stod(fields[5]);
            r.has_x = !fields[6].empty();
            r.x = r.has_x ? std::stod(fields[6]) : 0.0;
            r.solver_restarts = std::stoi(fields[7]);
            r.status = fields[8];
            records.push_back(std::move(r));
        } catch (const std::exception&) {
            throw ParseError("scan CSV: malformed line " + std::to_string(line_no));
        }
    }
    return records;
}

BoundsReport check_bounds(const std::vector<ScanRecord>& records, double tolerance) {
    BoundsReport report;
    report.records = records.size();
    for (const ScanRecord& r : records) {
        if (r.status != "ok" || !std::isfinite(r.ree)) {
            continue;
        }
        ++report.checked;
        const double n = r.negativity;
        if (r.ree < ree_bell_diagonal(n) - tolerance) {
            ++report.violations;
            continue;
        }
        // Cheap certified lower bounds on E_OGH before the full optimizer.
        double ogh_lb = std::max(ree_pure(n), ree_horodecki(n));
        if (n > 0.0 && n <= 0.527) {
            const double p0 = horodecki_p_from_negativity(n);
            const double p_try = std::clamp(p_opt_approx(n), p0, 1.0);
            ogh_lb = std::max(ogh_lb, ree_gh_of_p(p_try, n));
        }
        if (r.ree <= ogh_lb + tolerance) {
            continue;
        }
        if (r.ree > e_ogh(n) + tolerance) {
            ++report.violations;
        }
    }
    return report;
}

DistillReport distill_example() {
    DistillReport rep;
    rep.p = 0.37;
    rep.n_nominal = 0.1;
    rep.n_exact = horodecki_negativity(rep.p);
    rep.ed_lower_bound = 0.25 * rep.p * rep.p;
    rep.ree_pure_nominal = ree_pure(rep.n_nominal);
    rep.ree_pure_exact = ree_pure(rep.n_exact);
    rep.bound_exceeds_pure = rep.ed_lower_bound > rep.ree_pure_nominal;
    return rep;
}

}  // namespace entm
