// Test-only oracles, deliberately independent of the library's linear
// algebra path: a hand-rolled complex Jacobi eigensolver and small helpers
// used to cross-check eigenvalues, entropies and reduced states.
#pragma once

#include "entm/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using entm::complexd;
using entm::Matrix2c;
using entm::Matrix4c;
using entm::Vector4c;

// Eigenvalues of a 4x4 Hermitian matrix by cyclic complex Jacobi rotations,
// returned in descending order. No Eigen decomposition routines involved.
inline std::array<double, 4> jacobi_eigenvalues(Matrix4c a) {
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off < 1e-28) {
            break;
        }
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const complexd apq = a(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Unitary 2x2 rotation annihilating a(p,q):
                // |apq| e^{i phi} = apq; rotate in the (p,q) plane.
                const double phi = std::arg(apq);
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const complexd e_phase = std::exp(complexd(0.0, phi));
                // columns
                for (int k = 0; k < 4; ++k) {
                    const complexd akp = a(k, p);
                    const complexd akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(e_phase) * akq;
                    a(k, q) = s * e_phase * akp + c * akq;
                }
                // rows
                for (int k = 0; k < 4; ++k) {
                    const complexd apk = a(p, k);
                    const complexd aqk = a(q, k);
                    a(p, k) = c * apk - s * e_phase * aqk;
                    a(q, k) = s * std::conj(e_phase) * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, 4> vals{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

inline double min_eigenvalue(const Matrix4c& a) {
    return jacobi_eigenvalues(a)[3];
}

// Reduced state of the first qubit: rhoA(a,c) = sum_b rho(2a+b, 2c+b).
inline Matrix2c reduced_first(const Matrix4c& rho) {
    Matrix2c r;
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            r(a, c) = rho(2 * a, 2 * c) + rho(2 * a + 1, 2 * c + 1);
        }
    }
    return r;
}

inline double entropy_bits_2x2(const Matrix2c& r) {
    // 2x2 Hermitian eigenvalues in closed form.
    const double tr = r.trace().real();
    const double det = (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double l1 = 0.5 * (tr + disc);
    const double l2 = 0.5 * (tr - disc);
    double s = 0.0;
    for (double l : {l1, l2}) {
        if (l > 1e-12) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

// Trace distance (1/2) || a - b ||_1 via the Jacobi oracle.
inline double trace_distance(const Matrix4c& a, const Matrix4c& b) {
    const auto vals = jacobi_eigenvalues(a - b);
    double sum = 0.0;
    for (double v : vals) {
        sum += std::abs(v);
    }
    return 0.5 * sum;
}

}  // namespace oracle
