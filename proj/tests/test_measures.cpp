#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entm/families.hpp"
#include "entm/measures.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace entm;

namespace {

DensityMatrix bell_state() {
    const Vector4c psi = bell_ket(1);
    return DensityMatrix::unchecked(psi * psi.adjoint());
}

}  // namespace

TEST_CASE("negativity") {
    CHECK(negativity(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {0.2, 0.5, 0.9}) {
        CHECK(negativity(css_horodecki(p)) < 1e-10);
    }
    // Horodecki state: eigenvalue route against the closed form
    const double n37 = negativity(horodecki_state(0.37));
    CHECK(n37 == doctest::Approx(horodecki_negativity(0.37)).epsilon(1e-10));
    CHECK(n37 == doctest::Approx(0.1006).epsilon(1e-3));
}

TEST_CASE("log negativity") {
    CHECK(log_negativity(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(log_negativity(css_horodecki(0.5)) == doctest::Approx(0.0));
    const DensityMatrix rho = horodecki_state(0.37);
    CHECK(log_negativity(rho) == doctest::Approx(std::log2(1.0 + negativity(rho))).epsilon(1e-14));
    CHECK(log_negativity(rho) == doctest::Approx(0.1383).epsilon(1e-3));
}

TEST_CASE("concurrence") {
    CHECK(concurrence(pure_state(0.5).projector()) == doctest::Approx(1.0).epsilon(1e-10));
    const Matrix4c zero = basis_ket(0) * basis_ket(0).adjoint();
    CHECK(concurrence(DensityMatrix::unchecked(zero)) == doctest::Approx(0.0));
    // C(rho_H(p)) = p, the closed-form oracle for the spin-flip convention
    for (double p : {0.2, 0.5, 0.9}) {
        CHECK(concurrence(horodecki_state(p)) == doctest::Approx(p).epsilon(1e-10));
    }
}

TEST_CASE("entanglement of formation") {
    CHECK(entanglement_of_formation(bell_state()) == doctest::Approx(1.0).epsilon(1e-10));
    const Matrix4c zero = basis_ket(0) * basis_ket(0).adjoint();
    CHECK(entanglement_of_formation(DensityMatrix::unchecked(zero)) == doctest::Approx(0.0));
    // pure state: matches the reduced-state entropy (partial-trace oracle)
    const DensityMatrix psiback = pure_state(0.3).projector();
    const double reduced_entropy = oracle::entropy_bits_2x2(oracle::reduced_first(psiback.mat()));
    CHECK(entanglement_of_formation(psiback) == doctest::Approx(reduced_entropy).epsilon(1e-10));
}

TEST_CASE("negativity never exceeds concurrence") {
    for (int rank = 1; rank <= 4; ++rank) {
        Rng rng(100 + rank);
        for (int i = 0; i < 2000; ++i) {
            const DensityMatrix rho = random_density(rank, rng);
            CHECK(negativity(rho) <= concurrence(rho) + 1e-9);
        }
    }
}

TEST_CASE("pure states have equal negativity and concurrence") {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const DensityMatrix rho = random_density(1, seed);
        CHECK(std::abs(negativity(rho) - concurrence(rho)) < 1e-9);
    }
}

TEST_CASE("separable parametrization decodes to valid separable states") {
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> x(SeparableParams::kDim);
        for (double& v : x) {
            v = 3.0 * rng.gaussian();
        }
        const Matrix4c sigma = SeparableParams::from_flat(x).decode();
        CHECK_NOTHROW(DensityMatrix{sigma});
        CHECK(oracle::min_eigenvalue(partial_transpose(sigma)) > -1e-10);
    }
}

TEST_CASE("ppt projection fixes separable states") {
    const DensityMatrix sep = css_horodecki(0.7);
    CHECK(max_abs(ppt_projection(sep) - sep.mat()) < 1e-12);
}

TEST_CASE("ree_numeric reproduces known values") {
    SUBCASE("Bell state") {
        const CssPair pair = ree_numeric(bell_state(), 2, 1);
        CHECK(pair.ree == doctest::Approx(1.0).epsilon(5e-4));
        CHECK(pair.restarts == 2);
        CHECK(pair.iterations > 0);
    }
    SUBCASE("rank-2 Bell-diagonal at N = 0.5") {
        const CssPair pair = ree_numeric(bell_diagonal({0.0, 0.75, 0.0, 0.25}), 2, 1);
        CHECK(pair.ree == doctest::Approx(0.188722).epsilon(5e-4));
    }
    SUBCASE("Horodecki p = 0.8 against the closed form") {
        const CssPair pair = ree_numeric(horodecki_state(0.8), 2, 1);
        CHECK(pair.ree ==
              doctest::Approx(ree_horodecki(horodecki_negativity(0.8))).epsilon(5e-4));
    }
}

TEST_CASE("ree_numeric output pair is self-consistent") {
    const CssPair pair = ree_numeric(horodecki_state(0.6), 2, 1);
    // sigma is PPT
    CHECK(oracle::min_eigenvalue(partial_transpose(pair.sigma.mat())) > -1e-9);
    // ree equals the relative entropy of the pair
    CHECK(std::abs(pair.ree - relative_entropy(pair.rho, pair.sigma)) < 1e-9);
}

TEST_CASE("ree_numeric on separable input returns nearly zero") {
    // a full-rank separable state straight out of the parametrization
    Rng rng(13);
    std::vector<double> x(SeparableParams::kDim);
    for (double& v : x) {
        v = rng.gaussian();
    }
    const DensityMatrix sep(SeparableParams::from_flat(x).decode());
    const CssPair pair = ree_numeric(sep, 2, 3);
    CHECK(pair.ree >= 0.0);
    CHECK(pair.ree <= 1e-6);
}

TEST_CASE("ree_numeric is deterministic for fixed arguments") {
    const DensityMatrix rho = random_density(3, 11);
    const CssPair a = ree_numeric(rho, 2, 5);
    const CssPair b = ree_numeric(rho, 2, 5);
    CHECK(a.ree == b.ree);
    CHECK(max_abs(a.sigma.mat() - b.sigma.mat()) == 0.0);
}

TEST_CASE("ree_numeric bounded by entanglement of formation") {
    for (int rank : {2, 3, 4}) {
        Rng rng(200 + rank);
        for (int i = 0; i < 3; ++i) {
            const DensityMatrix rho = random_density(rank, rng);
            CHECK(ree_numeric(rho, 2, 1).ree <= entanglement_of_formation(rho) + 5e-4);
        }
    }
    // pure states: the bound is tight
    const DensityMatrix psi = random_density(1, 321);
    CHECK(std::abs(ree_numeric(psi, 2, 1).ree - entanglement_of_formation(psi)) <= 5e-4);
}
