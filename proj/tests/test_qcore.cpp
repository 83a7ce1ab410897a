#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entm/families.hpp"
#include "entm/qcore.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace entm;

namespace {

DensityMatrix bell_state() {
    const Vector4c psi = bell_ket(1);
    return DensityMatrix::unchecked(psi * psi.adjoint());
}

}  // namespace

TEST_CASE("density matrix validation names the violated invariant") {
    Matrix4c ok = Matrix4c::Identity() * 0.25;
    CHECK_NOTHROW(DensityMatrix{ok});

    Matrix4c bad_trace = Matrix4c::Identity() * 0.3;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, InvalidState);

    Matrix4c non_herm = ok;
    non_herm(0, 1) = complexd(0.1, 0.0);
    CHECK_THROWS_AS(DensityMatrix{non_herm}, InvalidState);

    Matrix4c negative = Matrix4c::Zero();
    negative(0, 0) = 1.1;
    negative(1, 1) = -0.1;
    CHECK_THROWS_AS(DensityMatrix{negative}, InvalidState);
}

TEST_CASE("partial transpose on diagonal states is the identity") {
    const Matrix4c m = Matrix4c::Identity() * 0.25;
    CHECK(max_abs(partial_transpose(m) - m) == doctest::Approx(0.0));
}

TEST_CASE("partial transpose of a Bell state has eigenvalues 1/2,1/2,1/2,-1/2") {
    const Matrix4c pt = partial_transpose(bell_state().mat());
    const auto vals = oracle::jacobi_eigenvalues(pt);
    CHECK(vals[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals[3] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial transpose is an involution preserving trace and hermiticity") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const DensityMatrix rho = random_density(4, seed);
        const Matrix4c pt = partial_transpose(rho.mat());
        CHECK(max_abs(partial_transpose(pt) - rho.mat()) < 1e-15);
        CHECK(std::abs(pt.trace().real() - 1.0) < 1e-14);
        CHECK(max_abs(pt - pt.adjoint()) < 1e-14);
    }
}

TEST_CASE("hermitian_eig handles fixed inputs") {
    SUBCASE("maximally mixed") {
        const EigenSystem es = hermitian_eig(Matrix4c::Identity() * 0.25);
        for (int i = 0; i < 4; ++i) {
            CHECK(es.values(i) == doctest::Approx(0.25).epsilon(1e-14));
        }
    }
    SUBCASE("diagonal matrix keeps standard basis") {
        Matrix4c d = Matrix4c::Zero();
        d(0, 0) = 0.4;
        d(1, 1) = 0.3;
        d(2, 2) = 0.2;
        d(3, 3) = 0.1;
        const EigenSystem es = hermitian_eig(d);
        CHECK(es.values(0) == doctest::Approx(0.4));
        CHECK(es.values(1) == doctest::Approx(0.3));
        CHECK(es.values(2) == doctest::Approx(0.2));
        CHECK(es.values(3) == doctest::Approx(0.1));
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(es.vectors(i, i)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("rank-1 projector") {
        const EigenSystem es = hermitian_eig(bell_state().mat());
        CHECK(es.values(0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(es.values(1)) < 1e-12);
        const complexd overlap = (bell_ket(1).adjoint() * es.vectors.col(0))(0);
        CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("rejects non-Hermitian input") {
        Matrix4c m = Matrix4c::Zero();
        m(0, 1) = 1.0;
        CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
    }
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on random matrices") {
    Rng rng(42);
    double worst_recon = 0.0;
    double worst_ortho = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Matrix4c m = random_hermitian(rng);
        const EigenSystem es = hermitian_eig(m);
        Matrix4c rebuilt = Matrix4c::Zero();
        for (int k = 0; k < 4; ++k) {
            rebuilt += es.values(k) * (es.vectors.col(k) * es.vectors.col(k).adjoint());
        }
        worst_recon = std::max(worst_recon, max_abs(rebuilt - m));
        const Matrix4c gram = es.vectors.adjoint() * es.vectors;
        worst_ortho = std::max(worst_ortho, max_abs(gram - Matrix4c::Identity()));
        CHECK(es.values(0) >= es.values(1));
        CHECK(es.values(1) >= es.values(2));
        CHECK(es.values(2) >= es.values(3));
    }
    CHECK(worst_recon < 1e-9);
    CHECK(worst_ortho < 1e-9);
}

TEST_CASE("eigenvalues match the Jacobi oracle on random states") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Matrix4c m = random_hermitian(rng);
        const EigenSystem es = hermitian_eig(m);
        const auto ref = oracle::jacobi_eigenvalues(m);
        for (int k = 0; k < 4; ++k) {
            CHECK(es.values(k) == doctest::Approx(ref[k]).epsilon(1e-10));
        }
    }
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(bell_state()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(random_density(1, 99)) < 1e-9);
    CHECK(von_neumann_entropy(DensityMatrix::unchecked(Matrix4c::Identity() * 0.25)) ==
          doctest::Approx(2.0).epsilon(1e-12));

    // rank-2 Bell-diagonal state at N = 0.5
    const DensityMatrix bd = bell_diagonal({0.0, 0.75, 0.0, 0.25});
    CHECK(von_neumann_entropy(bd) == doctest::Approx(0.811278).epsilon(1e-6));
}

TEST_CASE("relative entropy basics") {
    SUBCASE("S(rho||rho) = 0") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const DensityMatrix rho = random_density(4, seed);
            CHECK(std::abs(relative_entropy(rho, rho)) < 1e-11);
        }
    }
    SUBCASE("Bell state against the Horodecki CSS at p = 1") {
        CHECK(relative_entropy(bell_state(), css_horodecki(1.0)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("disjoint support is infinite") {
        const Matrix4c zero_proj = basis_ket(0) * basis_ket(0).adjoint();
        CHECK(std::isinf(
            relative_entropy(bell_state(), DensityMatrix::unchecked(zero_proj))));
    }
    SUBCASE("Klein inequality on random pairs") {
        Rng rng(5);
        for (int i = 0; i < 200; ++i) {
            const DensityMatrix rho = random_density(4, rng.raw());
            const DensityMatrix sigma = random_density(4, rng.raw());
            CHECK(relative_entropy(rho, sigma) >= -1e-9);
        }
    }
}

TEST_CASE("random_density produces the requested rank deterministically") {
    CHECK_THROWS_AS(random_density(0, 1), BadRank);
    CHECK_THROWS_AS(random_density(5, 1), BadRank);

    SUBCASE("bit-identical for equal seeds") {
        const DensityMatrix a = random_density(4, 7);
        const DensityMatrix b = random_density(4, 7);
        CHECK(max_abs(a.mat() - b.mat()) == 0.0);
    }

    SUBCASE("rank-2 invariant sweep") {
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            const DensityMatrix rho = random_density(2, seed);
            CHECK_NOTHROW(DensityMatrix{rho.mat()});
            const EigenSystem es = hermitian_eig(rho.mat());
            CHECK(es.values(1) > 1e-12);
            CHECK(std::abs(es.values(2)) < 1e-12);
            CHECK(std::abs(es.values(3)) < 1e-12);
        }
    }
}

TEST_CASE("partial-transpose eigenvalues stay in [-1/2, 1]") {
    for (int rank = 1; rank <= 4; ++rank) {
        Rng rng(1000 + rank);
        for (int i = 0; i < 2500; ++i) {
            const DensityMatrix rho = random_density(rank, rng);
            const EigenSystem es = hermitian_eig(partial_transpose(rho.mat()));
            CHECK(es.values(0) <= 1.0 + 1e-12);
            CHECK(es.values(3) >= -0.5 - 1e-12);
        }
    }
}
