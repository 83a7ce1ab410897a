#include "entm/extremal.hpp"

#include "entm/measures.hpp"

#include <cmath>

namespace entm {

namespace {

Vector4c fix_phase(const Vector4c& v) {
    int imax = 0;
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(v(i)) > best) {
            best = std::abs(v(i));
            imax = i;
        }
    }
    const complexd phase = v(imax) / std::abs(v(imax));
    return v / phase;
}

}  // namespace

std::pair<PureState, double> optimal_eigvec(const DensityMatrix& rho) {
    const EigenSystem es = hermitian_eig(partial_transpose(rho.mat()));
    const double mu_min = es.values(3);
    if (mu_min >= -1e-10) {
        throw NotEntangled("optimal_eigvec: state has no negative partial-transpose eigenvalue");
    }
    return {PureState(fix_phase(es.vectors.col(3))), mu_min};
}

ExtremalReport check_extremal_rank2(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    std::optional<double> l_override) {
    const EigenSystem er = hermitian_eig(rho.mat());
    if (er.values(2) > 1e-10) {
        throw RankMismatch("check_extremal_rank2: rho has rank > 2");
    }
    if (er.values(1) < 1e-10) {
        throw RankMismatch("check_extremal_rank2: rho has rank < 2");
    }
    const double lam1 = er.values(0);
    const double lam2 = er.values(1);
    const Vector4c e1 = er.vectors.col(0);
    const Vector4c e2 = er.vectors.col(1);

    // log2 sigma on its support, plus the support-inclusion check.
    const EigenSystem es = hermitian_eig(sigma.mat());
    Matrix4c log_sigma = Matrix4c::Zero();
    Matrix4c kernel_proj = Matrix4c::Zero();
    for (int i = 0; i < 4; ++i) {
        const Vector4c v = es.vectors.col(i);
        if (es.values(i) > tol::eig_floor) {
            log_sigma += std::log2(es.values(i)) * (v * v.adjoint());
        } else {
            kernel_proj += v * v.adjoint();
        }
    }
    for (const Vector4c& e : {e1, e2}) {
        const double leak = (e.adjoint() * kernel_proj * e)(0).real();
        if (leak > 1e-10) {
            throw SupportMismatch("check_extremal_rank2: supp(rho) leaks outside supp(sigma)");
        }
    }

    const auto [psi, mu_min] = optimal_eigvec(rho);
    const Matrix4c b_psi = partial_transpose(psi.amp * psi.amp.adjoint());

    const complexd a12 = (e1.adjoint() * log_sigma * e2)(0);
    const complexd b12 = (e1.adjoint() * b_psi * e2)(0);
    const double a11 = (e1.adjoint() * log_sigma * e1)(0).real();
    const double a22 = (e2.adjoint() * log_sigma * e2)(0).real();
    const double b11 = (e1.adjoint() * b_psi * e1)(0).real();
    const double b22 = (e2.adjoint() * b_psi * e2)(0).real();

    const double neg = -2.0 * mu_min;
    const double ree = relative_entropy(rho, sigma);

    ExtremalReport rep;
    if (l_override) {
        rep.l = *l_override;
    } else if (std::abs(b11 - b22) > 1e-12) {
        rep.l = (a11 - a22 - (std::log2(lam1) - std::log2(lam2))) / (b11 - b22);
    } else {
        // Degenerate difference; fall back to the first diagonal equation.
        rep.l = (ree - std::log2(lam1) + a11) / (b11 + 0.5 * neg);
    }
    rep.residual_offdiag = std::abs(a12 - rep.l * b12);
    rep.residual_diag = std::abs(std::log2(lam1) - a11 + rep.l * b11 - (ree - 0.5 * rep.l * neg));
    rep.lhs_rhs_zero = std::abs(a12) < 1e-9 && std::abs(b12) < 1e-9;
    return rep;
}

double lagrange_l_gh(const RhoZ& rho, double ree, double R1) {
    const double f = std::sqrt(rho.r1 * rho.r1 + 4.0 * rho.y * rho.y);
    if (f - rho.r1 <= 1e-12) {
        throw DomainError("lagrange_l_gh: f <= r1 (separable degeneracy)");
    }
    if (rho.r1 <= 0.0 || R1 <= 0.0) {
        throw DomainError("lagrange_l_gh: r1 and R1 must be positive");
    }
    return 2.0 * f * (ree - std::log2(rho.r1) + std::log2(R1)) /
           ((f + 1.0) * (f - rho.r1));
}

}  // namespace entm
