#include "entm/qcore.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace entm {

namespace {

std::string describe(const char* what, double value) {
    std::ostringstream os;
    os << what << " (defect " << value << ")";
    return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4c& m) : mat_(m) {
    if (!m.allFinite()) {
        throw InvalidState("density matrix has non-finite entries");
    }
    const double herm = max_abs(m - m.adjoint());
    if (herm > tol::hermiticity) {
        throw InvalidState(describe("density matrix is not Hermitian", herm));
    }
    const double tr = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
    if (tr > tol::trace) {
        throw InvalidState(describe("density matrix trace is not 1", tr));
    }
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol::psd) {
        throw InvalidState(describe("density matrix is not positive semidefinite", min_eig));
    }
}

PureState::PureState(const Vector4c& a) : amp(a) {
    if (!a.allFinite()) {
        throw InvalidState("state vector has non-finite entries");
    }
    const double n = a.norm();
    if (std::abs(n - 1.0) > tol::hermiticity) {
        throw InvalidState(describe("state vector is not normalized", n - 1.0));
    }
}

Matrix4c partial_transpose(const Matrix4c& m) {
    Matrix4c out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
                }
            }
        }
    }
    return out;
}

EigenSystem hermitian_eig(const Matrix4c& m) {
    const double herm = max_abs(m - m.adjoint());
    if (herm > 1e-8) {
        throw NotHermitian(describe("matrix is not Hermitian", herm));
    }
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()));
    EigenSystem sys;
    // Eigen sorts ascending; flip to descending.
    for (int i = 0; i < 4; ++i) {
        sys.values(i) = es.eigenvalues()(3 - i);
        sys.vectors.col(i) = es.eigenvectors().col(3 - i);
    }
    return sys;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const EigenSystem es = hermitian_eig(rho.mat());
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double lam = es.values(i);
        if (lam > tol::eig_floor) {
            s -= lam * std::log2(lam);
        }
    }
    return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const EigenSystem er = hermitian_eig(rho.mat());
    double tr_rho_log_rho = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double lam = er.values(i);
        if (lam > tol::eig_floor) {
            tr_rho_log_rho += lam * std::log2(lam);
        }
    }
    const EigenSystem es = hermitian_eig(sigma.mat());
    double tr_rho_log_sigma = 0.0;
    for (int j = 0; j < 4; ++j) {
        const Vector4c v = es.vectors.col(j);
        const double overlap = std::max(0.0, (v.adjoint() * rho.mat() * v)(0).real());
        const double gam = es.values(j);
        if (gam < tol::eig_floor) {
            if (overlap > tol::support_overlap) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        tr_rho_log_sigma += overlap * std::log2(gam);
    }
    return tr_rho_log_rho - tr_rho_log_sigma;
}

DensityMatrix random_density(int rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(rank, rng);
}

DensityMatrix random_density(int rank, Rng& rng) {
    if (rank < 1 || rank > 4) {
        throw BadRank("rank must be 1..4");
    }
    Eigen::Matrix<complexd, 4, Eigen::Dynamic> g(4, rank);
    for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < 4; ++i) {
            g(i, j) = rng.complex_gaussian();
        }
    }
    Matrix4c m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint());
    return DensityMatrix::unchecked(m);
}

Matrix4c random_hermitian(Rng& rng) {
    Matrix4c a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a(i, j) = rng.complex_gaussian();
        }
    }
    return 0.5 * (a + a.adjoint());
}

double binary_entropy(double x) {
    double s = 0.0;
    if (x > tol::eig_floor) {
        s -= x * std::log2(x);
    }
    if (1.0 - x > tol::eig_floor) {
        s -= (1.0 - x) * std::log2(1.0 - x);
    }
    return s;
}

double xlog2(double x, double y) {
    if (x == 0.0) {
        return 0.0;
    }
    return x * std::log2(std::max(y, tol::eig_floor));
}

}  // namespace entm
