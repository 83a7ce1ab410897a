#pragma once

#include "entm/qcore.hpp"

#include <utility>

namespace entm {

/// Rank-<=2 state of the form diag(r1, r2, r3, 0) with coherence y between
/// |01> and |10>. Generalized Horodecki states satisfy y^2 = r2 r3.
struct RhoZ {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double y = 0.0;

    static RhoZ from_gh(double p, double P);
    DensityMatrix to_density() const;
    double negativity() const;  // sqrt(r1^2 + 4 y^2) - r1
};

/// Candidate closest separable state: diag(R1, R2, R3, R4) with coherence Y
/// between |01> and |10> and Y = sqrt(R1 R4) (PPT boundary).
struct SigmaZ {
    double R1 = 0.0;
    double R2 = 0.0;
    double R3 = 0.0;
    double R4 = 0.0;
    double Y = 0.0;

    DensityMatrix to_density() const;
};

struct GHSolution {
    RhoZ rho;
    SigmaZ sigma;
    double ree = 0.0;
    double x_max = 0.0;    // (R1 + R4) / R1
    double residual = 0.0; // defect of the single-variable equation at the root
};

/// p |psi_P><psi_P| + (1-p) |00><00|.
DensityMatrix gen_horodecki(double p, double P);

/// Closed-form negativity sqrt((1-p)^2 + 4 p^2 P (1-P)) - (1-p).
double gh_negativity(double p, double P);

/// Schmidt parameter P >= 1/2 with gh_negativity(p, P) = N. Throws
/// DomainError when p < p0(N) (negative discriminant).
double gh_param_from_N(double p, double N);

/// Closest separable state of a generalized Horodecki state by root-solving
/// the single-variable reduction for R1 on [r1, 1]: dense sign-change scan
/// followed by bisection. Throws NoBracket when no root exists and
/// DegenerateDelta when the inner discriminant is negative at the root.
GHSolution solve_gh_css(const RhoZ& rho);

/// Closed-form REE of the pair (rho, sigma); equals the direct relative
/// entropy when sigma solves the CSS equation for rho.
double ree_gh(const RhoZ& rho, const SigmaZ& sigma);

/// REE of the generalized Horodecki state at mixing weight p and fixed
/// negativity N (pure-state limit handled at p = 1).
double ree_gh_of_p(double p, double N);

/// Maximizes the REE over p in [p0(N), 1] at fixed negativity by a grid
/// pre-scan (which validates unimodality) plus golden-section refinement.
/// Returns (p_opt, E_OGH(N)).
std::pair<double, double> p_opt(double N);

/// E_OGH(N) = p_opt(N).second, the conjectured REE upper bound.
double e_ogh(double N);

/// Quadratic fit 1/3 + (8/5) N - (7/11) N^2, valid for N in [0, 0.527].
double p_opt_approx(double N);

/// (1-x) rho_GH(p, N) + x sigma_GH, x in [0, 1].
DensityMatrix ghprime_state(double p, double N, double x);

}  // namespace entm
