#pragma once

#include "entm/qcore.hpp"

#include <cstdint>

namespace entm {

/// A full-rank separable state on the PPT boundary together with the kernel
/// vector of sigma^Gamma and the precomputed G(sigma) operator, from which
/// entangled states with known REE are generated as rho = sigma - x G.
struct BoundaryCss {
    DensityMatrix sigma;
    PureState phi;
    Matrix4c g;
};

/// G(sigma) = sum_ij G_ij |i><i| (|phi><phi|)^Gamma |j><j| with logarithmic
/// mean coefficients G_ij = (gamma_i - gamma_j)/(ln gamma_i - ln gamma_j),
/// degenerating to gamma_i when |gamma_i - gamma_j| <= 1e-12. Hermitian and
/// traceless whenever phi is in the kernel of sigma^Gamma. Throws
/// RankDeficient unless sigma is full rank (all eigenvalues >= 1e-8).
Matrix4c build_g(const DensityMatrix& sigma, const PureState& phi);

/// Validates the BoundaryCss invariants for a given sigma (full rank,
/// one-dimensional sigma^Gamma kernel) and assembles phi and G. Throws
/// InvalidState when the invariants fail.
BoundaryCss boundary_from_sigma(const DensityMatrix& sigma);

/// Largest x >= 0 for which sigma - x G stays positive semidefinite, found
/// by doubling then bisection to 1e-12.
double x_max(const BoundaryCss& b);

/// rho(x) = sigma - x G. Throws DomainError if x < 0 or rho(x) leaves the
/// positive semidefinite cone.
DensityMatrix rho_from_css(const BoundaryCss& b, double x);

/// Closed-form REE of rho(x) with sigma as its closest separable state:
/// S(sigma) - S(rho) + x tr[(|phi><phi|)^Gamma sigma log2 sigma].
double ree_inverse(const BoundaryCss& b, double x);

/// Random boundary state: draw a full-rank entangled state and bisect along
/// the segment toward the maximally mixed state until the minimal eigenvalue
/// of sigma^Gamma vanishes. Deterministic per seed; resamples internally on
/// rank or kernel-degeneracy failures, throwing SamplingExhausted after 100
/// attempts.
BoundaryCss sample_boundary(std::uint64_t seed);

}  // namespace entm
