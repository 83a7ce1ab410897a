#pragma once

#include "entm/errors.hpp"
#include "entm/linalg.hpp"

#include <cstdint>

namespace entm {

/// Eigendecomposition of a Hermitian 4x4 matrix. Eigenvalues are sorted
/// descending; vectors.col(i) is the unit eigenvector for values(i).
struct EigenSystem {
    Eigen::Vector4d values;
    Matrix4c vectors;
};

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite
/// (within the shared tolerances). Construction throws InvalidState naming
/// the violated invariant. Hot paths that build states guaranteed valid by
/// construction can use unchecked().
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix4c& m);

    static DensityMatrix unchecked(const Matrix4c& m) { return DensityMatrix(m, Unchecked{}); }

    const Matrix4c& mat() const { return mat_; }

private:
    struct Unchecked {};
    DensityMatrix(const Matrix4c& m, Unchecked) : mat_(m) {}
    Matrix4c mat_;
};

/// Normalized two-qubit state vector.
struct PureState {
    Vector4c amp;

    explicit PureState(const Vector4c& a);

    DensityMatrix projector() const { return DensityMatrix::unchecked(amp * amp.adjoint()); }
};

/// Transpose on the second qubit: <ab|out|cd> = <ad|m|cb>. Involutive,
/// trace- and Hermiticity-preserving.
Matrix4c partial_transpose(const Matrix4c& m);

/// Throws NotHermitian when the symmetry defect exceeds 1e-8.
EigenSystem hermitian_eig(const Matrix4c& m);

/// S(rho) = -sum_i lambda_i log2 lambda_i, in bits; 0*log0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho||sigma) = Tr rho log2 rho - Tr rho log2 sigma, in bits. Returns
/// +infinity when supp(rho) is not contained in supp(sigma): some eigenvector
/// of sigma with eigenvalue < 1e-12 has <v|rho|v> > 1e-10.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Induced (Ginibre) random state of the requested rank: G G^dag / Tr with G
/// a 4 x rank matrix of standard complex Gaussian entries. Deterministic for
/// a fixed seed. Throws BadRank outside 1..4.
DensityMatrix random_density(int rank, std::uint64_t seed);
DensityMatrix random_density(int rank, Rng& rng);

/// Random Hermitian matrix (GUE-style, unnormalized); test and sampling aid.
Matrix4c random_hermitian(Rng& rng);

double binary_entropy(double x);

/// x*log2(y) with the shared eigenvalue floor on y and 0*log := 0.
double xlog2(double x, double y);

}  // namespace entm
