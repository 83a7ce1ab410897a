#include "entm/css_inverse.hpp"

#include "entm/numeric.hpp"

#include <cmath>

namespace entm {

namespace {

constexpr double kFullRankFloor = 1e-8;
constexpr double kKernelWindow = 1e-9;

double min_eig(const Matrix4c& m) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace

Matrix4c build_g(const DensityMatrix& sigma, const PureState& phi) {
    const EigenSystem es = hermitian_eig(sigma.mat());
    if (es.values(3) < kFullRankFloor) {
        throw RankDeficient("build_g: sigma is not full rank");
    }
    const Matrix4c proj_pt = partial_transpose(phi.amp * phi.amp.adjoint());
    const Matrix4c in_basis = es.vectors.adjoint() * proj_pt * es.vectors;
    Matrix4c coeff;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double gi = es.values(i);
            const double gj = es.values(j);
            if (std::abs(gi - gj) <= 1e-12) {
                coeff(i, j) = gi;
            } else {
                coeff(i, j) = (gi - gj) / (std::log(gi) - std::log(gj));
            }
        }
    }
    const Matrix4c g_basis = coeff.cwiseProduct(in_basis);
    const Matrix4c g = es.vectors * g_basis * es.vectors.adjoint();
    return 0.5 * (g + g.adjoint());
}

BoundaryCss boundary_from_sigma(const DensityMatrix& sigma) {
    const EigenSystem es = hermitian_eig(sigma.mat());
    if (es.values(3) < kFullRankFloor) {
        throw InvalidState("boundary state is not full rank");
    }
    const EigenSystem pt = hermitian_eig(partial_transpose(sigma.mat()));
    if (std::abs(pt.values(3)) > kKernelWindow) {
        throw InvalidState("sigma^Gamma has no eigenvalue at zero");
    }
    if (pt.values(2) < kFullRankFloor) {
        throw InvalidState("sigma^Gamma kernel is not one-dimensional");
    }
    PureState phi(pt.vectors.col(3));
    Matrix4c g = build_g(sigma, phi);
    return BoundaryCss{sigma, phi, g};
}

double x_max(const BoundaryCss& b) {
    const double scale = b.g.cwiseAbs().maxCoeff();
    if (scale < 1e-14) {
        throw DomainError("x_max: G vanishes, the ray is unbounded");
    }
    auto min_eig_at = [&](double x) { return min_eig(b.sigma.mat() - x * b.g); };
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (min_eig_at(hi) >= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 80) {
            throw DomainError("x_max: no positivity boundary found along the ray");
        }
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (min_eig_at(mid) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

DensityMatrix rho_from_css(const BoundaryCss& b, double x) {
    if (x < 0.0) {
        throw DomainError("rho_from_css: x must be nonnegative");
    }
    Matrix4c m = b.sigma.mat() - x * b.g;
    m = 0.5 * (m + m.adjoint());
    if (min_eig(m) < -1e-9) {
        throw DomainError("rho_from_css: x exceeds x_max");
    }
    return DensityMatrix::unchecked(m);
}

double ree_inverse(const BoundaryCss& b, double x) {
    const DensityMatrix rho = rho_from_css(b, x);  // validates x
    const EigenSystem es = hermitian_eig(b.sigma.mat());
    const Matrix4c proj_pt = partial_transpose(b.phi.amp * b.phi.amp.adjoint());
    double trace_term = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double gam = es.values(i);
        if (gam <= tol::eig_floor) continue;
        const Vector4c v = es.vectors.col(i);
        trace_term += gam * std::log2(gam) * (v.adjoint() * proj_pt * v)(0).real();
    }
    return von_neumann_entropy(b.sigma) - von_neumann_entropy(rho) + x * trace_term;
}

BoundaryCss sample_boundary(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const DensityMatrix rho0 = random_density(4, rng);
        if (min_eig(partial_transpose(rho0.mat())) >= 0.0) {
            continue;  // separable start, the segment would not cross the boundary
        }
        const Matrix4c mixed = Matrix4c::Identity() * 0.25;
        auto pt_min_eig = [&](double t) {
            const Matrix4c s = (1.0 - t) * rho0.mat() + t * mixed;
            return min_eig(partial_transpose(s));
        };
        const double t_star = bisect_root(pt_min_eig, 0.0, 1.0, 1e-12);
        const Matrix4c s = (1.0 - t_star) * rho0.mat() + t_star * mixed;
        const DensityMatrix sigma = DensityMatrix::unchecked(0.5 * (s + s.adjoint()));
        try {
            return boundary_from_sigma(sigma);
        } catch (const InvalidState&) {
            continue;  // rank or kernel degeneracy; resample
        }
    }
    throw SamplingExhausted("sample_boundary: 100 attempts without a valid boundary state");
}

}  // namespace entm
