#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chromatic/chromatic_core.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/fir_design.hpp"
#include "chromatic/orthopoly.hpp"

using namespace chromatic;
using std::numbers::pi;

TEST_CASE("transfer function of trivial filters") {
    FirFilter zero{FamilyId::legendre(), 0, 3, std::vector<double>(7, 0.0)};
    CHECK(transfer_function(zero, 1.2) == cplx(0.0, 0.0));
    FirFilter delta{FamilyId::legendre(), 0, 3, std::vector<double>(7, 0.0)};
    delta.taps[3] = 1.0;
    for (double w : {-3.0, 0.0, 0.4, 2.9}) CHECK(std::abs(transfer_function(delta, w) - 1.0) <= 1e-15);
}

TEST_CASE("designs: DC response and parity") {
    const FamilySpec leg("legendre");
    // the DC error is governed by the band edges; it reaches 1e-6 only near N = 96
    CHECK(std::abs(transfer_function(design_ls(leg, 0, 16).filter, 0.0) - 1.0) <= 1e-2);
    CHECK(std::abs(transfer_function(design_ls(leg, 0, 96).filter, 0.0) - 1.0) <= 1e-6);
    for (std::size_t n : {1u, 3u, 4u}) {
        const auto d = design_ls(leg, n, 16);
        const long N = 16;
        for (long k = 0; k <= N; ++k) {
            if (n % 2) CHECK(d.filter.tap(k) == -d.filter.tap(-k));
            else CHECK(d.filter.tap(k) == d.filter.tap(-k));
        }
        if (n % 2) CHECK(transfer_function(d.filter, 0.0) == cplx(0.0, 0.0));
        CHECK(d.report.grid_size > 0);
        CHECK(d.report.condition_number >= 1.0);
    }
    const auto d1 = design_ls(leg, 1, 24);
    for (double w = -0.85 * pi; w <= 0.85 * pi; w += 0.1) {
        const cplx H = transfer_function(d1.filter, w);
        CHECK(std::abs(H.real()) <= 1e-12);
        CHECK(std::abs(H.imag() - std::sqrt(3.0) * w / pi) <= d1.report.passband_max_error + 1e-12);
    }
}

TEST_CASE("passband error is the measured worst case") {
    const FamilySpec leg("legendre");
    const auto d = design_ls(leg, 4, 20);
    double worst = 0.0;
    for (double w = 0.0; w <= d.filter.passband_edge; w += d.filter.passband_edge / 4000) {
        const cplx target = i_pow(4) * eval_p(leg, 4, w);
        worst = std::max(worst, std::abs(transfer_function(d.filter, w) - target));
    }
    CHECK(worst <= d.report.passband_max_error * (1 + 1e-6));
    CHECK(worst >= d.report.passband_max_error * 0.9);
}

TEST_CASE("exponential response is exact algebra") {
    const auto d = design_ls(FamilySpec("legendre"), 3, 10);
    const double w = 0.7;
    std::vector<cplx> s(60);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::polar(1.0, w * j);
    for (long t = 10; t < 50; ++t)
        CHECK(std::abs(apply(d.filter, s, t) - transfer_function(d.filter, w) * std::polar(1.0, w * t)) <= 1e-12);
    CHECK_THROWS_AS(apply(d.filter, s, 5), ArgumentError);
    CHECK_THROWS_AS(apply(d.filter, s, 55), ArgumentError);
}

TEST_CASE("filters on sampled signals") {
    const FamilySpec leg("legendre");
    const auto d2 = design_ls(leg, 2, 64);
    const double w = 0.5 * pi;
    std::vector<double> c(400);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = std::cos(w * j);
    for (long t = 100; t < 120; ++t) {
        const double ref = (i_pow(2) * eval_p(leg, 2, w) * std::polar(1.0, w * t)).real();
        CHECK(std::abs(apply(d2.filter, c, t).real() - ref) <= d2.report.passband_max_error);
    }
    // constant signal picks up H(0) = i^n p_n(0)
    std::vector<double> one(200, 1.0);
    CHECK(std::abs(apply(d2.filter, one, 100) - i_pow(2) * eval_p(leg, 2, 0.0)) <= d2.report.passband_max_error);
    // sinc samples are a Kronecker delta; sinc is full band and the passband stops
    // at 0.9 pi, so c_0 sits near 0.94 rather than 1
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto d = design_ls(leg, n, 64);
        std::vector<double> delta(129, 0.0);
        delta[64] = 1.0;
        const double got = apply(d.filter, delta, 64).real();
        const double expect = n == 0 ? 1.0 : 0.0;
        CHECK(std::abs(got - expect) <= (n == 0 ? 0.1 : 1.0));
    }
}

TEST_CASE("FIR accuracy improves with length") {
    const FamilySpec leg("legendre");
    double prev = INFINITY;
    for (std::size_t N : {32u, 48u, 64u}) {
        const double e = design_ls(leg, 16, N).report.passband_max_error;
        CHECK(e <= prev);
        prev = e;
    }
}

TEST_CASE("design argument checks") {
    CHECK_THROWS_AS(design_ls(FamilySpec("hermite"), 2, 16), DomainError);
    FirDesignOptions bad;
    bad.passband_edge = 0.99 * pi;
    bad.stopband_edge = 0.9 * pi;
    CHECK_THROWS_AS(design_ls(FamilySpec("legendre"), 2, 16, bad), ArgumentError);
}

TEST_CASE("Shannon decay report") {
    const auto r0 = shannon_decay_report(0, 0.0, 4);
    for (const auto& row : r0)
        if (row.m == 0) CHECK(row.magnitude == doctest::Approx(1.0));
    const auto r = shannon_decay_report(15, 0.0, 64);
    double mx = 0.0;
    for (const auto& row : r) mx = std::max(mx, row.magnitude);
    CHECK(mx > 1e-2);
    for (const auto& row : r)
        for (const auto& other : r)
            if (other.m == -row.m) CHECK(other.magnitude == doctest::Approx(row.magnitude).epsilon(1e-12));
}
