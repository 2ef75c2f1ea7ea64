#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chromatic/chromatic_core.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/orthopoly.hpp"

using namespace chromatic;
using std::numbers::pi;

TEST_CASE("table entries") {
    const auto t = build_table(FamilySpec("legendre"), 4, 12);
    CHECK(t(0, 0) == cplx(1.0, 0.0));
    CHECK(t(1, 1).real() == doctest::Approx(-1.8137994).epsilon(1e-7));
    CHECK(t(1, 1).real() == doctest::Approx(-pi / std::sqrt(3.0)).epsilon(1e-15));
    // m(z) = sinc z: b[0][2] = -pi^2/6
    CHECK(t(0, 2).real() == doctest::Approx(-pi * pi / 6).epsilon(1e-15));
    for (const auto& id : representative_families()) {
        const auto tab = build_table(FamilySpec(id), 6, 20);
        CHECK(tab(0, 0) == cplx(1.0, 0.0));
        CHECK(tab(3, 1) == cplx(0.0, 0.0));
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::size_t k = 0; k < n; ++k) CHECK(tab(n, k) == cplx(0.0, 0.0));
    }
}

TEST_CASE("table columns are the Taylor coefficients of m") {
    // b[0][k] = i^k mu_k / k!
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        const auto tab = build_table(f, 2, 24);
        for (std::size_t k = 0; k <= 24; ++k) {
            const cplx expect = i_pow(k) * moment_jacobi_matrix(f, k) / std::tgamma(k + 1.0);
            CHECK(std::abs(tab(0, k) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("last column is exact") {
    // rows consume one column each; the table extends row 0 so column K is not truncated
    const FamilySpec f("hermite");
    const auto small = build_table(f, 10, 12), big = build_table(f, 10, 40);
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= 12; ++k)
            CHECK(std::abs(small(n, k) - big(n, k)) <= 1e-15 * std::max(1.0, std::abs(big(n, k))));
}

TEST_CASE("conversion matrices") {
    const FamilySpec leg("legendre");
    const auto c = conversion_matrices(leg, 20);
    CHECK(c.k2d_at(0, 0) == cplx(1.0, 0.0));
    CHECK(c.d2k_at(0, 0) == cplx(1.0, 0.0));
    CHECK(c.k2d_at(1, 1).real() == doctest::Approx(std::sqrt(3.0) / pi).epsilon(1e-15));
    // K^n = i^n p_n(-i D): k2d(n,k) = i^n (-i)^k [w^k] p_n
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        const OperatorCalculus calc(f, 20, 40);
        CHECK(calc.basis_change_residual() <= 1e-9);
        const auto& cv = calc.conversions();
        for (std::size_t n = 0; n <= 20; ++n)
            for (std::size_t k = n + 1; k <= 20; ++k) {
                CHECK(cv.k2d_at(n, k) == cplx(0.0, 0.0));
                CHECK(cv.d2k_at(n, k) == cplx(0.0, 0.0));
            }
        // evaluating the k2d row as a polynomial reproduces p_n
        for (double w : {0.3, 1.1}) {
            const auto p = eval_all_p(f, 12, w);
            for (std::size_t n = 0; n <= 12; ++n) {
                cplx acc = 0;
                for (std::size_t k = 0; k <= n; ++k) acc += cv.k2d_at(n, k) * std::pow(cplx(0, 1) * w, static_cast<int>(k));
                const cplx expect = i_pow(n) * p.values[n];
                CHECK(std::abs(acc - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
            }
        }
    }
}

TEST_CASE("jets: exponential, constant, identity") {
    const FamilySpec leg("legendre");
    const std::size_t N = 12;
    TaylorJet e;
    const double w = pi;
    for (std::size_t k = 0; k <= N; ++k) e.coefficients.push_back(std::pow(cplx(0, w), static_cast<int>(k)) / std::tgamma(k + 1.0));
    const auto cj = chromatic_jet_from_taylor(leg, e, N);
    CHECK(cj.values[1].imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::abs(cj.values[1].real()) < 1e-12);
    const auto p = eval_all_p(leg, N, w);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(std::abs(cj.values[n] - i_pow(n) * p.values[n]) <= 1e-10 * std::max(1.0, std::abs(p.values[n])));

    TaylorJet one;
    one.coefficients.assign(N + 1, 0.0);
    one.coefficients[0] = 1.0;
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        if (!f.symmetric()) continue;
        const auto c1 = chromatic_jet_from_taylor(f, one, N);
        CHECK(c1.values[0] == cplx(1.0, 0.0));
        for (std::size_t n = 1; n <= N; n += 2) CHECK(c1.values[n] == cplx(0.0, 0.0));
    }

    TaylorJet z;
    z.coefficients.assign(N + 1, 0.0);
    z.coefficients[1] = 1.0;
    const auto cz = chromatic_jet_from_taylor(leg, z, N);
    CHECK(std::abs(cz.values[0]) == 0.0);
    CHECK(cz.values[1].real() == doctest::Approx(std::sqrt(3.0) / pi).epsilon(1e-14));
}

TEST_CASE("jet round trips") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const FamilySpec leg("legendre");
    for (int trial = 0; trial < 5; ++trial) {
        TaylorJet jet;
        for (std::size_t k = 0; k <= 30; ++k) jet.coefficients.push_back(cplx(U(rng), U(rng)));
        const auto back = taylor_from_chromatic_jet(leg, chromatic_jet_from_taylor(leg, jet, 30), 30);
        for (std::size_t k = 0; k <= 30; ++k) CHECK(std::abs(back.coefficients[k] - jet.coefficients[k]) <= 1e-9);

        // this direction passes through Taylor coefficients of size up to pi^k / k!
        // times large d2k entries, so double rounding grows with the length
        ChromaticJet cj{leg.id(), 0.0, {}};
        for (std::size_t k = 0; k <= 20; ++k) cj.values.push_back(cplx(U(rng), U(rng)));
        const auto again = chromatic_jet_from_taylor(leg, taylor_from_chromatic_jet(leg, cj, 20), 20);
        for (std::size_t k = 0; k <= 20; ++k) CHECK(std::abs(again.values[k] - cj.values[k]) <= 1e-9);

        ChromaticJet long_jet{leg.id(), 0.0, {}};
        for (std::size_t k = 0; k <= 30; ++k) long_jet.values.push_back(cplx(U(rng), U(rng)));
        const auto c30 = conversion_matrices(leg, 30);
        const auto mid = taylor_from_chromatic_jet(leg, long_jet, 30);
        const auto round = chromatic_jet_from_taylor(leg, mid, 30);
        for (std::size_t n = 0; n <= 30; ++n) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= 30; ++k)
                scale += std::abs(c30.k2d_at(n, k)) * std::abs(mid.coefficients[k]) * std::tgamma(k + 1.0);
            CHECK(std::abs(round.values[n] - long_jet.values[n]) <= 64 * 1e-16 * scale + 1e-12);
        }
    }
    // the chromatic jet (1, 0, 0, ...) is not the constant 1: K^{2n}[1] != 0
    ChromaticJet unit{leg.id(), 0.0, std::vector<cplx>(9, 0.0)};
    unit.values[0] = 1.0;
    const auto t = taylor_from_chromatic_jet(leg, unit, 8);
    CHECK(t.coefficients[0] == cplx(1.0, 0.0));
    for (std::size_t k = 1; k <= 8; k += 2) CHECK(std::abs(t.coefficients[k]) < 1e-15);
    // a unit chromatic jet delta(n - m) maps to column m of d2k scaled by 1/k!
    const auto c = conversion_matrices(leg, 8);
    for (std::size_t m = 0; m <= 8; ++m) {
        ChromaticJet d{leg.id(), 0.0, std::vector<cplx>(9, 0.0)};
        d.values[m] = 1.0;
        const auto tj = taylor_from_chromatic_jet(leg, d, 8);
        for (std::size_t k = 0; k <= 8; ++k)
            CHECK(std::abs(tj.coefficients[k] - c.d2k_at(k, m) / std::tgamma(k + 1.0)) <= 1e-12);
    }
}

TEST_CASE("compose_at_zero: orthonormality") {
    CHECK(compose_at_zero(FamilySpec("legendre"), 5, 5).real() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(compose_at_zero(FamilySpec("hermite"), 2, 2).real() == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        CHECK(std::abs(compose_at_zero(f, 0, 3)) <= 1e-9);
        const OperatorCalculus calc(f, 40, 80);
        double worst = 0.0;
        for (std::size_t n = 0; n <= 40; ++n)
            for (std::size_t m = 0; m <= 40; ++m)
                worst = std::max(worst, std::abs((n % 2 ? -1.0 : 1.0) * calc.compose_at_zero(n, m) - (n == m ? 1.0 : 0.0)));
        CHECK_MESSAGE(worst <= 1e-8, f.name());
    }
}

TEST_CASE("Lemma bounds on the table and the monomial matrix") {
    for (const char* name : {"legendre", "hermite"}) {
        const FamilySpec f(name);
        const double M = 2.0, p = f.growth_exponent();
        const OperatorCalculus calc(f, 60, 120);
        for (std::size_t n = 0; n <= 60; ++n)
            for (std::size_t k = 0; k <= 60; ++k) {
                const double lf = std::lgamma(k + 1.0);
                const double b = std::abs(calc.table()(n, k));
                if (b > 0) CHECK(std::log(b) + (1 - p) * lf <= 2.0 * k * std::log(M + 1) + 1e-12);
                const double a = std::abs(calc.conversions().k2d_at(n, k));
                if (a > 0) CHECK(std::log(a) + p * lf <= n * std::log(3 * M) + 1e-12);
            }
    }
}

TEST_CASE("symmetric families give real tables") {
    for (const auto& id : representative_families()) {
        const FamilySpec f(id);
        const auto tab = build_table(f, 30, 60);
        double mx = 0.0, im = 0.0;
        for (const auto& v : tab.b) {
            mx = std::max(mx, std::abs(v));
            im = std::max(im, std::abs(v.imag()));
        }
        if (f.symmetric()) CHECK(im <= 1e-12 * mx);
        else CHECK(im > 0.0);
    }
}

TEST_CASE("argument validation") {
    const FamilySpec f("legendre");
    CHECK_THROWS_AS(OperatorCalculus(f, 10, 5), ArgumentError);
    const OperatorCalculus calc(f, 10);
    CHECK(calc.K() == 52);
    CHECK_THROWS_AS(calc.compose_at_zero(11, 0), ArgumentError);
    TaylorJet shortjet{0.0, {1.0, 2.0}};
    CHECK_THROWS_AS(calc.to_chromatic(shortjet, 5), ArgumentError);
}
