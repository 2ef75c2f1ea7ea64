#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chromatic/errors.hpp"
#include "chromatic/families.hpp"

using namespace chromatic;
using std::numbers::pi;

TEST_CASE("recursion coefficients match the printed closed forms") {
    const auto leg = recursion_coefficients(FamilySpec("legendre"), 0);
    CHECK(leg.gamma == doctest::Approx(1.8137994).epsilon(1e-7));
    CHECK(leg.gamma == doctest::Approx(pi / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(leg.beta == 0.0);

    const auto lag = recursion_coefficients(FamilySpec("laguerre"), 2);
    CHECK(lag.gamma == 3.0);
    CHECK(lag.beta == -5.0);

    const auto her = recursion_coefficients(FamilySpec("hermite"), 3);
    CHECK(her.gamma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(her.beta == 0.0);

    const FamilySpec cheb("chebyshev_t");
    CHECK(cheb.gamma(0) == doctest::Approx(pi / std::sqrt(2.0)));
    CHECK(cheb.gamma(1) == doctest::Approx(pi / 2));
    CHECK(FamilySpec("herron").gamma(4) == 5.0);
}

TEST_CASE("gegenbauer(1) coincides with chebyshev_u and jacobi(0,0) with legendre") {
    const FamilySpec g(FamilyId::gegenbauer(1)), u("chebyshev_u");
    const FamilySpec j(FamilyId::jacobi(0, 0)), l("legendre");
    for (std::size_t n = 0; n < 50; ++n) {
        CHECK(g.gamma(n) == doctest::Approx(u.gamma(n)).epsilon(1e-14));
        CHECK(j.gamma(n) == doctest::Approx(l.gamma(n)).epsilon(1e-14));
        CHECK(std::abs(j.beta(n)) < 1e-15);
    }
}

TEST_CASE("family identifiers parse and print") {
    CHECK(FamilyId::parse("jacobi(0.5,-0.25)") == FamilyId::jacobi(0.5, -0.25));
    CHECK(FamilyId::jacobi(0.5, -0.25).to_string() == "jacobi(0.5,-0.25)");
    CHECK(FamilyId::gegenbauer(1).to_string() == "gegenbauer(1)");
    CHECK(FamilyId::parse("hermite") == FamilyId::hermite());
    for (const auto& id : representative_families()) CHECK(FamilyId::parse(id.to_string()) == id);
    CHECK(representative_families().size() == 8);
    CHECK_THROWS_AS(FamilyId::parse("legendre(1)"), ArgumentError);
    CHECK_THROWS_AS(FamilyId::parse("jacobi(1)"), ArgumentError);
    CHECK_THROWS_AS(FamilyId::parse("gegenbauer(x)"), ArgumentError);
    CHECK_THROWS_AS(FamilyId::parse("bessel"), ArgumentError);
}

TEST_CASE("parameter domains are enforced") {
    CHECK_THROWS_AS(FamilySpec(FamilyId::gegenbauer(0)), ParameterDomainError);
    CHECK_THROWS_AS(FamilySpec(FamilyId::gegenbauer(-0.5)), ParameterDomainError);
    CHECK_THROWS_AS(FamilySpec(FamilyId::jacobi(-1, 0)), ParameterDomainError);
    CHECK_THROWS_AS(FamilySpec(FamilyId::jacobi(0, -1.5)), ParameterDomainError);
    CHECK_NOTHROW(FamilySpec(FamilyId::gegenbauer(-0.25)));
    CHECK_NOTHROW(FamilySpec(FamilyId::jacobi(-0.5, -0.5)));
}

TEST_CASE("family metadata") {
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        const bool expect_sym = id.kind != FamilyKind::jacobi && id.kind != FamilyKind::laguerre;
        CHECK(f.symmetric() == expect_sym);
        for (std::size_t n = 0; n <= 200; ++n) {
            CHECK(f.gamma(n) > 0.0);
            if (f.symmetric()) CHECK(f.beta(n) == 0.0);
        }
        if (f.growth_exponent() < 1.0) {
            REQUIRE(f.weak_bound_M());
            const double M = *f.weak_bound_M(), p = f.growth_exponent();
            for (std::size_t n = 0; n <= 200; ++n) {
                const double s = std::pow(n + 1.0, p);
                CHECK(f.gamma(n) >= s / M);
                CHECK(f.gamma(n) <= M * s);
                CHECK(std::abs(f.beta(n)) <= M * f.gamma(n));
            }
        } else {
            CHECK_FALSE(f.weak_bound_M());
        }
    }
    CHECK(*FamilySpec("hermite").weak_bound_M() == 2.0);
    CHECK(*FamilySpec("legendre").weak_bound_M() <= 4.0);
    CHECK(*FamilySpec("chebyshev_t").weak_bound_M() <= 4.0);
    CHECK(*FamilySpec("chebyshev_u").weak_bound_M() <= 4.0);
    CHECK(FamilySpec("hermite").growth_exponent() == 0.5);
    CHECK(FamilySpec("laguerre").support() == Support::half_line);
    CHECK(FamilySpec("herron").support() == Support::real_line);
    CHECK(FamilySpec("legendre").rho() == 0.0);
    CHECK(FamilySpec("laguerre").rho() == 1.0);
    CHECK(FamilySpec("herron").rho() == doctest::Approx(2 / pi));
}

TEST_CASE("analytic moments") {
    CHECK(moment_analytic(FamilySpec("legendre"), 0) == 1.0);
    CHECK(moment_analytic(FamilySpec("legendre"), 2) == doctest::Approx(3.2898681).epsilon(1e-7));
    CHECK(moment_analytic(FamilySpec("legendre"), 3) == 0.0);
    CHECK(moment_analytic(FamilySpec("laguerre"), 3) == doctest::Approx(6.0));
    CHECK(moment_analytic(FamilySpec("hermite"), 4) == doctest::Approx(0.75));
    // sech moments are |E_2n|: 1, 1, 5, 61, 1385
    const FamilySpec her("herron");
    CHECK(moment_analytic(her, 2) == doctest::Approx(1.0));
    CHECK(moment_analytic(her, 4) == doctest::Approx(5.0));
    CHECK(moment_analytic(her, 6) == doctest::Approx(61.0));
    CHECK(moment_analytic(her, 8) == doctest::Approx(1385.0));
    // chebyshev_t: pi^2n binom(2n,n)/4^n
    CHECK(moment_analytic(FamilySpec("chebyshev_t"), 2) == doctest::Approx(pi * pi / 2));
    CHECK(moment_analytic(FamilySpec("chebyshev_u"), 0) == 1.0);
    CHECK(moment_analytic(FamilySpec("chebyshev_u"), 2) == doctest::Approx(pi * pi / 4));
    CHECK_THROWS_AS(moment_analytic(FamilySpec(FamilyId::gegenbauer(1)), 2), UnsupportedError);
    CHECK_THROWS_AS(moment_analytic(FamilySpec(FamilyId::jacobi(0.5, -0.25)), 2), UnsupportedError);
}

TEST_CASE("Jacobi matrix moments agree with closed forms") {
    CHECK(moment_jacobi_matrix(FamilySpec("legendre"), 2) == doctest::Approx(pi * pi / 3).epsilon(1e-15));
    CHECK(moment_jacobi_matrix(FamilySpec("laguerre"), 1) == doctest::Approx(1.0));
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        CHECK(moment_jacobi_matrix(f, 0) == 1.0);
        if (!has_analytic_moments(f)) continue;
        for (std::size_t k = 0; k <= 30; ++k) {
            const double a = moment_analytic(f, k), j = moment_jacobi_matrix(f, k);
            if (a == 0.0) CHECK(std::abs(j) < 1e-12);
            else CHECK(std::abs(j - a) / std::abs(a) <= 1e-10);
        }
    }
}

TEST_CASE("jacobi matrix layout and sign convention") {
    const auto j = jacobi_matrix(FamilySpec("laguerre"), 4);
    REQUIRE(j.dimension() == 4);
    CHECK(j.offdiagonal.size() == 3);
    CHECK(j.diagonal[0] == 1.0);  // -beta_0
    CHECK(j.diagonal[2] == 5.0);
    CHECK(j.offdiagonal[1] == 2.0);
}

TEST_CASE("Gauss quadrature reproduces moments") {
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        for (std::size_t n : {1u, 5u, 20u, 30u}) {
            const auto rule = gauss_quadrature(f, n);
            double wsum = 0.0;
            for (double w : rule.weights) {
                CHECK(w > 0.0);
                wsum += w;
            }
            CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
            for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
                double q = 0.0, scale = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double t = rule.weights[i] * std::pow(rule.nodes[i], static_cast<double>(k));
                    q += t;
                    scale += std::abs(t);
                }
                const double m = moment_jacobi_matrix(f, k);
                CHECK(std::abs(q - m) <= 1e-10 * std::max(1.0, scale));
            }
        }
    }
    const auto leg = gauss_quadrature(FamilySpec("legendre"), 20);
    double s2 = 0.0;
    for (std::size_t i = 0; i < 20; ++i) s2 += leg.weights[i] * leg.nodes[i] * leg.nodes[i];
    CHECK(std::abs(s2 - pi * pi / 3) <= 1e-12);
    const auto her = gauss_quadrature(FamilySpec("hermite"), 20);
    double s4 = 0.0;
    for (std::size_t i = 0; i < 20; ++i) s4 += her.weights[i] * std::pow(her.nodes[i], 4);
    CHECK(s4 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(gauss_quadrature(FamilySpec("hermite"), 0), ArgumentError);
}
