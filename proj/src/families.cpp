#include "entm/families.hpp"

#include "entm/gh_solver.hpp"

#include <cmath>
#include <sstream>

namespace entm {

namespace {

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << name << " = " << v << " outside [0,1]";
        throw DomainError(os.str());
    }
}

double param(const FamilyPoint& fp, const std::string& key) {
    auto it = fp.params.find(key);
    if (it == fp.params.end()) {
        throw DomainError("missing family parameter '" + key + "'");
    }
    return it->second;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Pure: return "pure";
        case Family::Horodecki: return "horodecki";
        case Family::HPrime: return "hprime";
        case Family::PPrime: return "pprime";
        case Family::BellDiagonal: return "bell_diagonal";
        case Family::GenHorodecki: return "gen_horodecki";
        case Family::GHPrime: return "ghprime";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::Pure, Family::Horodecki, Family::HPrime, Family::PPrime,
                     Family::BellDiagonal, Family::GenHorodecki, Family::GHPrime}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw DomainError("unknown family '" + name + "'");
}

Vector4c bell_ket(int i) {
    const int j = i / 2;
    const int k = i % 2;
    const double s = 1.0 / std::sqrt(2.0);
    Vector4c v = Vector4c::Zero();
    v(0 * 2 + k) = s;
    v(1 * 2 + (1 - k)) = (j == 0) ? s : -s;
    return v;
}

PureState pure_state(double P) {
    require_unit(P, "P");
    Vector4c amp = Vector4c::Zero();
    amp(1) = std::sqrt(P);
    amp(2) = std::sqrt(1.0 - P);
    return PureState(amp);
}

double ree_pure(double N) {
    require_unit(N, "N");
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - N * N))));
}

DensityMatrix horodecki_state(double p) {
    require_unit(p, "p");
    const Vector4c psi = bell_ket(1);
    const Matrix4c m = p * (psi * psi.adjoint()) +
                       (1.0 - p) * (basis_ket(0) * basis_ket(0).adjoint());
    return DensityMatrix::unchecked(m);
}

double horodecki_negativity(double p) {
    require_unit(p, "p");
    return std::sqrt((1.0 - p) * (1.0 - p) + p * p) - (1.0 - p);
}

double horodecki_p_from_negativity(double N) {
    require_unit(N, "N");
    return std::sqrt(2.0 * N * (1.0 + N)) - N;
}

double ree_horodecki(double N) {
    require_unit(N, "N");
    const double p = horodecki_p_from_negativity(N);
    return xlog2(p - 2.0, 1.0 - 0.5 * p) + xlog2(1.0 - p, 1.0 - p);
}

DensityMatrix css_horodecki(double p) {
    require_unit(p, "p");
    const double q = 0.5 * p;
    const Vector4c psi = bell_ket(1);
    const Matrix4c m = (1.0 - q) * (1.0 - q) * (basis_ket(0) * basis_ket(0).adjoint()) +
                       q * q * (basis_ket(3) * basis_ket(3).adjoint()) +
                       2.0 * q * (1.0 - q) * (psi * psi.adjoint());
    return DensityMatrix::unchecked(m);
}

double hprime_mixing(double p, double N) {
    require_unit(p, "p");
    require_unit(N, "N");
    const double p0 = horodecki_p_from_negativity(N);
    if (p < p0 - 1e-12) {
        std::ostringstream os;
        os << "p = " << p << " below p0(N) = " << p0;
        throw DomainError(os.str());
    }
    const double x = ((N + p) * (N + p) - 2.0 * N * (1.0 + N)) / (p * p * (1.0 + N));
    return std::max(0.0, x);
}

DensityMatrix hprime_state(double p, double N) {
    const double x = hprime_mixing(p, N);
    const Matrix4c m = (1.0 - x) * horodecki_state(p).mat() + x * css_horodecki(p).mat();
    return DensityMatrix::unchecked(m);
}

double ree_hprime(double p, double N) {
    const double x = hprime_mixing(p, N);
    const double q = 0.5 * p;
    const double y1 = 1.0 - q * x;
    const double y2 = 1.0 - 2.0 * q + q * q * x;
    return xlog2(q * q * x, x) + xlog2(2.0 * q * y1, y1 / (1.0 - q)) +
           xlog2(y2, y2 / ((1.0 - q) * (1.0 - q)));
}

DensityMatrix pprime_state(double P, double N) {
    require_unit(P, "P");
    require_unit(N, "N");
    const double half_width = 0.5 * std::sqrt(std::max(0.0, 1.0 - N * N));
    if (P < 0.5 - half_width - 1e-12 || P > 0.5 + half_width + 1e-12) {
        std::ostringstream os;
        os << "P = " << P << " outside [P-, P+] at N = " << N;
        throw DomainError(os.str());
    }
    const double root = 2.0 * std::sqrt(P * (1.0 - P));
    const double x = (root > 0.0) ? std::clamp(1.0 - N / root, 0.0, 1.0) : 0.0;
    const Vector4c psi = pure_state(P).amp;
    const Matrix4c sep = P * (basis_ket(1) * basis_ket(1).adjoint()) +
                         (1.0 - P) * (basis_ket(2) * basis_ket(2).adjoint());
    const Matrix4c m = (1.0 - x) * (psi * psi.adjoint()) + x * sep;
    return DensityMatrix::unchecked(m);
}

double ree_pprime(double P, double N) {
    require_unit(P, "P");
    require_unit(N, "N");
    const double half_width = 0.5 * std::sqrt(std::max(0.0, 1.0 - N * N));
    if (P < 0.5 - half_width - 1e-12 || P > 0.5 + half_width + 1e-12) {
        throw DomainError("P outside [P-, P+]");
    }
    if (N < 1e-12) {
        return 0.0;  // separable; both denominators below degenerate together
    }
    const double z = 2.0 * P * (1.0 - P) - 0.5 * N * N;
    const double root = std::sqrt(std::max(0.0, 1.0 - 2.0 * z));
    const double y_minus = 1.0 - root;
    const double y_plus = 1.0 + root;
    double e = binary_entropy(P);
    e -= (z - P * y_minus) / (2.0 * P - y_plus) * std::log2(std::max(0.5 * y_minus, tol::eig_floor));
    e -= (z - P * y_plus) / (2.0 * P - y_minus) * std::log2(std::max(0.5 * y_plus, tol::eig_floor));
    return e;
}

DensityMatrix bell_diagonal(const std::array<double, 4>& lambdas) {
    double sum = 0.0;
    for (double l : lambdas) {
        if (l < -1e-12) {
            throw DomainError("Bell-diagonal weight is negative");
        }
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw DomainError("Bell-diagonal weights do not sum to 1");
    }
    Matrix4c m = Matrix4c::Zero();
    for (int i = 0; i < 4; ++i) {
        const Vector4c b = bell_ket(i);
        m += lambdas[i] * (b * b.adjoint());
    }
    return DensityMatrix::unchecked(m);
}

double ree_bell_diagonal(double N) {
    require_unit(N, "N");
    return 1.0 - binary_entropy(0.5 * (1.0 + N));
}

DensityMatrix family_state(const FamilyPoint& fp) {
    switch (fp.family) {
        case Family::Pure:
            return pure_state(param(fp, "P")).projector();
        case Family::Horodecki:
            return horodecki_state(param(fp, "p"));
        case Family::HPrime:
            return hprime_state(param(fp, "p"), param(fp, "N"));
        case Family::PPrime:
            return pprime_state(param(fp, "P"), param(fp, "N"));
        case Family::BellDiagonal:
            return bell_diagonal({param(fp, "l0"), param(fp, "l1"), param(fp, "l2"),
                                  param(fp, "l3")});
        case Family::GenHorodecki:
            return gen_horodecki(param(fp, "p"), param(fp, "P"));
        case Family::GHPrime:
            return ghprime_state(param(fp, "p"), param(fp, "N"), param(fp, "x"));
    }
    throw DomainError("unknown family");
}

}  // namespace entm
