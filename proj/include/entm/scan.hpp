#pragma once

#include "entm/qcore.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entm {

enum class ScanMethod { Direct, Inverse };

const char* method_name(ScanMethod m);
ScanMethod method_from_name(const std::string& name);

/// One Monte-Carlo sample. For the inverse method x is the ray coordinate
/// rho = sigma - x G; for direct records it is absent.
struct ScanRecord {
    int rank = 0;
    std::uint64_t seed = 0;
    ScanMethod method = ScanMethod::Direct;
    double negativity = 0.0;
    double concurrence = 0.0;
    double ree = 0.0;
    double x = 0.0;
    bool has_x = false;
    int solver_restarts = 0;
    std::string status = "ok";
};

/// Closed-form and optimized REE curves on a uniform negativity grid.
struct CurveTable {
    std::vector<double> grid;
    std::vector<double> e_pure;
    std::vector<double> e_horodecki;
    std::vector<double> e_bd;
    std::vector<double> e_ogh;
    std::vector<double> p_opt;
};

/// Uniform grid over N in [1e-3, 1 - 1e-3]; n_grid >= 2.
CurveTable compute_curves(int n_grid);
void write_curves_csv(const CurveTable& table, std::ostream& out);

/// N_Y: the root of E_H(N) - E_P(N) on [0.1, 0.9], bisected to 1e-10.
double crossing_negativity();

/// (N', max gap) of E_H - E_P on [1e-4, N_Y] by golden-section search.
std::pair<double, double> max_gap();

/// Monte-Carlo scan. Direct method: random_density + ree_numeric. Inverse
/// method: sample_boundary + rho_from_css with x uniform in (0, x_max] for
/// rank 4 and x = x_max (rank-3 boundary states) for rank 3; rank 2 is not
/// reachable by the inverse construction. Per-record failures are flagged in
/// the status column and do not abort the scan. Deterministic for a fixed
/// seed regardless of thread count.
std::vector<ScanRecord> scan_records(int rank, int n, ScanMethod method, std::uint64_t seed,
                                     int restarts = 8, int threads = 0);

void write_scan_csv(const std::vector<ScanRecord>& records, std::ostream& out);
std::vector<ScanRecord> read_scan_csv(std::istream& in);

struct BoundsReport {
    std::size_t records = 0;
    std::size_t checked = 0;
    std::size_t violations = 0;
};

/// Verifies E_BD(N) - tol <= E_R <= E_OGH(N) + tol per record. The upper
/// bound first uses cheap certified lower bounds on E_OGH (the approximate
/// optimum and the pure-state value) and escalates to the exact optimizer
/// only for potential violations.
BoundsReport check_bounds(const std::vector<ScanRecord>& records, double tolerance = 1e-6);

/// The fixed distillation example: p = 0.37 (the Horodecki weight at nominal
/// negativity 0.1), lower distillation bound p^2/4, and the pure-state REE
/// at both the nominal and the exact negativity of rho_H(0.37).
struct DistillReport {
    double p = 0.0;
    double n_nominal = 0.0;
    double n_exact = 0.0;
    double ed_lower_bound = 0.0;
    double ree_pure_nominal = 0.0;
    double ree_pure_exact = 0.0;
    bool bound_exceeds_pure = false;
};

DistillReport distill_example();

/// Fixed-format float used in all CSV output: 12 significant digits.
std::string format_g12(double v);

}  // namespace entm
