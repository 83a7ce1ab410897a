#pragma once

#include "entm/gh_solver.hpp"
#include "entm/qcore.hpp"

#include <optional>
#include <utility>

namespace entm {

/// Lagrange-multiplier extremality diagnostics for a rank-2 state paired
/// with a candidate closest separable state.
struct ExtremalReport {
    double l = 0.0;               // multiplier, bits
    double residual_offdiag = 0.0;
    double residual_diag = 0.0;
    bool lhs_rhs_zero = false;    // both sides of the off-diagonal condition vanish
};

/// Eigenvector of rho^Gamma for its most negative eigenvalue, with the
/// eigenvalue; -2 * eigenvalue is the negativity. The phase is fixed by
/// making the largest-magnitude component real positive. Throws
/// NotEntangled when the minimal eigenvalue is >= -1e-10.
std::pair<PureState, double> optimal_eigvec(const DensityMatrix& rho);

/// Evaluates the rank-2 extremal conditions for (rho, sigma): the multiplier
/// is solved from the difference of the two diagonal equations (which is
/// independent of the REE constant), or taken from l_override when given.
/// residual_offdiag is |<e1|log2 sigma|e2> - l <e1|(psi psi)^Gamma|e2>| and
/// residual_diag the defect of the first diagonal equation with the REE
/// constant evaluated self-consistently as S(rho||sigma). Throws
/// RankMismatch unless rho has rank exactly 2 and SupportMismatch when
/// supp(rho) leaks outside supp(sigma).
ExtremalReport check_extremal_rank2(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    std::optional<double> l_override = std::nullopt);

/// Closed-form multiplier for generalized Horodecki states:
/// l = 2f (E - log2 r1 + log2 R1) / ((f+1)(f-r1)) with f = sqrt(r1^2+4y^2).
/// Throws DomainError when f <= r1 (separable degeneracy).
double lagrange_l_gh(const RhoZ& rho, double ree, double R1);

}  // namespace entm
