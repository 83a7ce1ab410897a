#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entm/families.hpp"
#include "entm/gh_solver.hpp"
#include "entm/measures.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace entm;

namespace {

RhoZ gh_at(double p, double n) {
    return RhoZ::from_gh(p, gh_param_from_N(p, n));
}

}  // namespace

TEST_CASE("gen_horodecki") {
    SUBCASE("P = 1/2 is the standard Horodecki state") {
        CHECK(max_abs(gen_horodecki(0.6, 0.5).mat() - horodecki_state(0.6).mat()) < 1e-15);
    }
    SUBCASE("p = 1 is the pure state") {
        const Vector4c psi = pure_state(0.3).amp;
        CHECK(max_abs(gen_horodecki(1.0, 0.3).mat() - (psi * psi.adjoint()).eval()) < 1e-15);
    }
    SUBCASE("closed-form negativity matches the eigenvalue route") {
        CHECK(gh_negativity(0.6, 0.3) ==
              doctest::Approx(negativity(gen_horodecki(0.6, 0.3))).epsilon(1e-10));
    }
    CHECK_THROWS_AS(gen_horodecki(1.2, 0.5), DomainError);
}

TEST_CASE("gh_param_from_N") {
    const double n = 0.3;
    const double p0 = horodecki_p_from_negativity(n);
    CHECK(gh_param_from_N(p0, n) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(gh_param_from_N(1.0, n) ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(1.0 - n * n))).epsilon(1e-12));
    CHECK_THROWS_AS(gh_param_from_N(p0 - 0.05, n), DomainError);
    // round trip through the negativity formula
    const double P = gh_param_from_N(0.8, n);
    CHECK(gh_negativity(0.8, P) == doctest::Approx(n).epsilon(1e-10));
}

TEST_CASE("negativity round trip over the parameter grid") {
    for (int i = 1; i <= 20; ++i) {
        const double n = 0.0475 * i;
        const double p0 = horodecki_p_from_negativity(n);
        for (int j = 1; j <= 20; ++j) {
            const double p = p0 + (1.0 - p0) * j / 20.0;
            const double P = gh_param_from_N(p, n);
            CHECK(std::abs(gh_negativity(p, P) - n) < 1e-9);
        }
    }
}

TEST_CASE("solve_gh_css on the Horodecki slice matches the analytic CSS") {
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const GHSolution sol = solve_gh_css(RhoZ::from_gh(p, 0.5));
        const double q = 0.5 * p;
        CHECK(std::abs(sol.sigma.R1 - (1.0 - q) * (1.0 - q)) < 1e-8);
        CHECK(std::abs(sol.sigma.R2 - q * (1.0 - q)) < 1e-8);
        CHECK(std::abs(sol.sigma.R3 - q * (1.0 - q)) < 1e-8);
        CHECK(std::abs(sol.sigma.R4 - q * q) < 1e-8);
        CHECK(max_abs(sol.sigma.to_density().mat() - css_horodecki(p).mat()) < 1e-8);
        CHECK(sol.ree ==
              doctest::Approx(ree_horodecki(horodecki_negativity(p))).epsilon(1e-9));
    }
}

TEST_CASE("solve_gh_css solution properties") {
    const RhoZ rho = gh_at(0.8, 0.3);
    const GHSolution sol = solve_gh_css(rho);
    SUBCASE("closed form equals the direct relative entropy") {
        const double direct = relative_entropy(rho.to_density(), sol.sigma.to_density());
        CHECK(sol.ree == doctest::Approx(direct).epsilon(1e-9));
    }
    SUBCASE("sigma sits on the PPT boundary") {
        const double mu =
            oracle::min_eigenvalue(partial_transpose(sol.sigma.to_density().mat()));
        CHECK(std::abs(mu) < 1e-8);
    }
    SUBCASE("bookkeeping invariants") {
        CHECK(sol.residual <= 1e-10);
        CHECK(sol.x_max ==
              doctest::Approx((sol.sigma.R1 + sol.sigma.R4) / sol.sigma.R1).epsilon(1e-9));
        CHECK(std::abs(sol.sigma.Y - std::sqrt(sol.sigma.R1 * sol.sigma.R4)) < 1e-10);
        CHECK(sol.sigma.R1 >= sol.sigma.R4);
    }
    SUBCASE("rejects states violating the coherence condition") {
        CHECK_THROWS_AS(solve_gh_css(RhoZ{0.3, 0.4, 0.3, 0.1}), DomainError);
    }
}

TEST_CASE("ree_gh") {
    SUBCASE("Horodecki point") {
        const GHSolution sol = solve_gh_css(RhoZ::from_gh(0.6, 0.5));
        CHECK(ree_gh(sol.rho, sol.sigma) ==
              doctest::Approx(ree_horodecki(horodecki_negativity(0.6))).epsilon(1e-9));
    }
    SUBCASE("pure-state limit") {
        const double n = 0.4;
        const double r1 = 1e-7;
        const double s = 1.0 - r1;
        const double disc = std::sqrt(s * s - n * (n + 2.0 * r1));
        const RhoZ rho{r1, 0.5 * (s - disc), 0.5 * (s + disc),
                       std::sqrt(0.25 * (s * s - disc * disc))};
        const GHSolution sol = solve_gh_css(rho);
        CHECK(std::abs(sol.ree - ree_pure(n)) < 1e-6);
    }
    SUBCASE("cross-check against the numerical minimizer") {
        const RhoZ rho = gh_at(0.8, 0.3);
        const GHSolution sol = solve_gh_css(rho);
        CHECK(ree_numeric(rho.to_density(), 2, 1).ree == doctest::Approx(sol.ree).epsilon(5e-4));
    }
}

TEST_CASE("ree_gh is invariant under P <-> 1-P") {
    for (double p : {0.7, 0.9}) {
        const double P = gh_param_from_N(p, 0.35);
        const GHSolution a = solve_gh_css(RhoZ::from_gh(p, P));
        const GHSolution b = solve_gh_css(RhoZ::from_gh(p, 1.0 - P));
        CHECK(a.ree == doctest::Approx(b.ree).epsilon(1e-9));
        // the swapped solution carries the swapped populations
        CHECK(a.sigma.R2 == doctest::Approx(b.sigma.R3).epsilon(1e-9));
        const double direct = relative_entropy(RhoZ::from_gh(p, 1.0 - P).to_density(),
                                               b.sigma.to_density());
        CHECK(b.ree == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("p_opt") {
    SUBCASE("pure state is optimal at high negativity") {
        const auto [p, e] = p_opt(0.7);
        CHECK(p == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(e == doctest::Approx(ree_pure(0.7)).epsilon(1e-9));
    }
    SUBCASE("approximate optimum is nearly optimal at N = 0.2") {
        const auto [p, e] = p_opt(0.2);
        const double e_approx = ree_gh_of_p(p_opt_approx(0.2), 0.2);
        CHECK(std::abs(e_approx - e) <= 1e-4);
        CHECK(p < 1.0 - 1e-3);
    }
    SUBCASE("maximal advantage over the known curves at N = 0.377") {
        const auto [p, e] = p_opt(0.377);
        const double gap = e - std::max(ree_pure(0.377), ree_horodecki(0.377));
        CHECK(gap == doctest::Approx(0.0148).epsilon(0.07));  // +- 1e-3 absolute
        CHECK(std::abs(gap - 0.0148) < 1e-3);
    }
}

TEST_CASE("pure-optimal transition") {
    for (double n : {0.54, 0.6}) {
        CHECK(p_opt(n).first == doctest::Approx(1.0).epsilon(1e-7));
    }
    for (double n : {0.3, 0.45}) {
        CHECK(p_opt(n).first < 1.0 - 1e-3);
    }
}

TEST_CASE("p_opt_approx") {
    CHECK(p_opt_approx(0.0) == doctest::Approx(1.0 / 3.0));
    CHECK(p_opt_approx(0.5) == doctest::Approx(0.974242).epsilon(1e-6));
    CHECK(p_opt_approx(0.527) < 1.0);
    CHECK(p_opt_approx(0.527) > 0.98);
    CHECK_THROWS_AS(p_opt_approx(0.7), DomainError);
}

TEST_CASE("optimal curve dominates the pure and Horodecki curves") {
    for (int i = 0; i < 50; ++i) {
        const double n = 0.01 + (0.99 - 0.01) * i / 49.0;
        const double e = e_ogh(n);
        CHECK(e >= ree_pure(n) - 1e-9);
        CHECK(e >= ree_horodecki(n) - 1e-9);
    }
}

TEST_CASE("ghprime_state") {
    const double p = 0.8;
    const double n = 0.3;
    const RhoZ rho = gh_at(p, n);
    SUBCASE("endpoints") {
        CHECK(max_abs(ghprime_state(p, n, 0.0).mat() - rho.to_density().mat()) < 1e-12);
        CHECK(negativity(ghprime_state(p, n, 1.0)) < 1e-8);
    }
    SUBCASE("midpoint stays inside the conjectured band") {
        const DensityMatrix mid = ghprime_state(p, n, 0.5);
        const double n_mid = negativity(mid);
        const double e_mid = ree_numeric(mid, 2, 1).ree;
        CHECK(e_mid >= ree_bell_diagonal(n_mid) - 1e-6);
        CHECK(e_mid <= e_ogh(n_mid) + 5e-4);
    }
    CHECK_THROWS_AS(ghprime_state(p, n, 1.5), DomainError);
}
