#pragma once

#include "entm/qcore.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace entm {

/// N(rho) = max{0, -2 min eig(rho^Gamma)}.
double negativity(const DensityMatrix& rho);

/// log2(N(rho) + 1), the PPT exact-preparation cost.
double log_negativity(const DensityMatrix& rho);

/// Wootters concurrence via the spin-flipped matrix
/// rho (sy x sy) rho^* (sy x sy), conjugation in the computational basis.
double concurrence(const DensityMatrix& rho);

/// H2((1 + sqrt(1 - C^2)) / 2) with C the concurrence.
double entanglement_of_formation(const DensityMatrix& rho);

/// Unconstrained parametrization of a separable state as a mixture of 16
/// product pure states: 15 softmax logits (16th fixed at 0) plus 4 Bloch
/// angles per product state = 79 real parameters. Every decode is exactly
/// separable, so objective values are always valid REE upper bounds.
struct SeparableParams {
    static constexpr int kStates = 16;
    static constexpr int kDim = 79;

    std::array<double, kStates - 1> logits{};
    std::array<std::array<double, 4>, kStates> angles{};  // thetaA, phiA, thetaB, phiB

    Matrix4c decode() const;
    std::array<double, kStates> weights() const;

    std::vector<double> flatten() const;
    static SeparableParams from_flat(const std::vector<double>& x);

    /// Heuristic inverse: product states built from the eigenbases of the
    /// reduced states (plus balanced superpositions), weighted by overlap.
    /// decode(encode(sigma)) approximates sigma; used to warm-start searches.
    static SeparableParams encode(const Matrix4c& sigma);
};

/// Entangled state, candidate closest separable state, and the REE bound.
struct CssPair {
    DensityMatrix rho;
    DensityMatrix sigma;
    double ree = 0.0;
    int iterations = 0;
    int restarts = 0;
    double spread = 0.0;
};

/// Projection onto the PPT set by eigenvalue clipping of rho^Gamma followed
/// by the inverse transpose and renormalization. Not guaranteed positive
/// semidefinite itself; used only to seed searches.
Matrix4c ppt_projection(const DensityMatrix& rho);

/// Nelder-Mead minimization of S(rho || decode(params)) over the
/// 79-dimensional separable parametrization. One restart is warm-started
/// from the PPT projection of rho, the rest are random with seeds derived
/// from (seed, restart index); the best result wins, so the output is
/// deterministic for fixed arguments. Throws NonConvergence when every
/// restart hits the iteration cap without reaching the spread target.
CssPair ree_numeric(const DensityMatrix& rho, int restarts = 8, std::uint64_t seed = 1);

}  // namespace entm
