#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace entm {

using complexd = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Matrix2c = Eigen::Matrix2cd;
using Vector4c = Eigen::Vector4cd;
using Vector2c = Eigen::Vector2cd;

// Numerical tolerances shared across the library. The eigenvalue floor is
// used wherever a logarithm of a (near-)zero probability appears.
namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;             // allowed negative slack on eigenvalues
inline constexpr double eig_floor = 1e-12;       // log argument floor
inline constexpr double support_overlap = 1e-10; // support-mismatch detection
}  // namespace tol

inline double max_abs(const Matrix4c& m) {
    return m.cwiseAbs().maxCoeff();
}

// Computational basis ket |i> with (a,b) -> 2a+b ordering |00>,|01>,|10>,|11>.
inline Vector4c basis_ket(int i) {
    Vector4c v = Vector4c::Zero();
    v(i) = 1.0;
    return v;
}

inline Vector4c kron(const Vector2c& a, const Vector2c& b) {
    Vector4c v;
    v(0) = a(0) * b(0);
    v(1) = a(0) * b(1);
    v(2) = a(1) * b(0);
    v(3) = a(1) * b(1);
    return v;
}

// Deterministic stream splitter (splitmix64 finalizer applied twice).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    for (int round = 0; round < 2; ++round) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
    }
    return z;
}

// Seeded generator with explicit, implementation-independent distributions.
// mt19937_64 output is fully specified by the standard; the uniform and
// Box-Muller transforms below avoid the implementation-defined std::
// distributions, so streams are reproducible bit-for-bit everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // [0,1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0,1], keeps the log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    complexd complex_gaussian() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace entm
