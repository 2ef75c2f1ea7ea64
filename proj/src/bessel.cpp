#include "chromatic/bessel.hpp"

#include <algorithm>
#include <cmath>

namespace chromatic {
namespace {

using cplx = std::complex<double>;

constexpr double kRescale = 1e-250;
constexpr double kOverflow = 1e250;

std::size_t miller_start(std::size_t nmax, double ax) {
    const double top = std::max(static_cast<double>(nmax), ax);
    const auto m = static_cast<std::size_t>(top + 40.0 + std::sqrt(60.0 * top));
    return m + (m % 2);  // even
}

std::vector<cplx> bessel_series(std::size_t nmax, cplx x) {
    std::vector<cplx> out(nmax + 1);
    const cplx q = -x * x / 4.0;
    cplx lead = 1.0;  // (x/2)^n / n!
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (n > 0) lead *= x / (2.0 * n);
        cplx term = 1.0, sum = 1.0;
        for (std::size_t m = 1; m < 60; ++m) {
            term *= q / (static_cast<double>(m) * static_cast<double>(n + m));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        out[n] = lead * sum;
    }
    return out;
}

std::vector<cplx> spherical_series(std::size_t nmax, cplx x) {
    std::vector<cplx> out(nmax + 1);
    const cplx q = -x * x / 2.0;
    cplx lead = 1.0;  // x^n / (2n+1)!!
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (n > 0) lead *= x / (2.0 * n + 1.0);
        cplx term = 1.0, sum = 1.0;
        for (std::size_t m = 1; m < 60; ++m) {
            term *= q / (static_cast<double>(m) * (2.0 * (n + m) + 1.0));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        out[n] = lead * sum;
    }
    return out;
}

}  // namespace

std::vector<cplx> bessel_j_sequence(std::size_t nmax, cplx x) {
    if (x == cplx(0.0)) {
        std::vector<cplx> out(nmax + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    if (std::abs(x) < 1.0) return bessel_series(nmax, x);

    // Normalise with e^{-i s x} = J_0 + 2 sum (-i s)^k J_k, choosing s so
    // that the right-hand side has modulus e^{|Im x|}; on the real axis use
    // J_0 + 2 sum J_{2k} = 1 and stay real.
    const bool real_axis = x.imag() == 0.0;
    const double s = x.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx unit = cplx(0.0, -s);
    const cplx rhs = real_axis ? cplx(1.0) : std::exp(cplx(0.0, -s) * x);

    const std::size_t M = miller_start(nmax, std::abs(x));
    std::vector<cplx> out(nmax + 1, 0.0);
    std::vector<cplx> weight(M + 1);
    weight[0] = 1.0;
    for (std::size_t k = 1; k <= M; ++k) {
        if (real_axis)
            weight[k] = k % 2 == 0 ? 2.0 : 0.0;
        else
            weight[k] = 2.0 * std::pow(unit, static_cast<int>(k % 4));
    }

    cplx next = 0.0, cur = 1.0;
    cplx norm = weight[M] * cur;
    if (M <= nmax) out[M] = cur;
    for (std::size_t k = M; k >= 1; --k) {
        const cplx prev = (2.0 * static_cast<double>(k) / x) * cur - next;
        next = cur;
        cur = prev;
        norm += weight[k - 1] * cur;
        if (k - 1 <= nmax) out[k - 1] = cur;
        if (std::abs(cur) > kOverflow) {
            cur *= kRescale;
            next *= kRescale;
            norm *= kRescale;
            for (std::size_t j = k - 1; j <= nmax && j < out.size(); ++j) out[j] *= kRescale;
        }
    }
    const cplx scale = rhs / norm;
    for (auto& v : out) v *= scale;
    return out;
}

cplx bessel_j(std::size_t n, cplx x) { return bessel_j_sequence(n, x)[n]; }

double bessel_j(std::size_t n, double x) { return bessel_j_sequence(n, cplx(x, 0.0))[n].real(); }

std::vector<cplx> spherical_j_sequence(std::size_t nmax, cplx x) {
    if (x == cplx(0.0)) {
        std::vector<cplx> out(nmax + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    if (std::abs(x) < 1.0) return spherical_series(nmax, x);

    const bool real_axis = x.imag() == 0.0;
    const std::size_t M = miller_start(std::max<std::size_t>(nmax, 1), std::abs(x));
    std::vector<cplx> out(std::max<std::size_t>(nmax, 1) + 1, 0.0);
    cplx next = 0.0, cur = 1.0;
    double energy = (2.0 * M + 1.0) * std::norm(cur);  // real axis only
    for (std::size_t k = M; k >= 1; --k) {
        const cplx prev = ((2.0 * static_cast<double>(k) + 1.0) / x) * cur - next;
        next = cur;
        cur = prev;
        energy += (2.0 * (k - 1) + 1.0) * std::norm(cur);
        if (k - 1 < out.size()) out[k - 1] = cur;
        // squares enter the energy, so rescale more gently than above
        if (std::abs(cur) > 1e100) {
            cur *= 1e-100;
            next *= 1e-100;
            energy *= 1e-200;
            for (std::size_t j = k - 1; j < out.size(); ++j) out[j] *= 1e-100;
        }
    }

    const cplx j0 = std::sin(x) / x;
    const cplx j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    cplx scale;
    if (real_axis) {
        // sum (2k+1) j_k^2 = 1; the sign comes from whichever of j0, j1 is larger.
        const double mag = 1.0 / std::sqrt(energy);
        const bool use0 = std::abs(j0) >= std::abs(j1);
        const double ref = use0 ? j0.real() : j1.real();
        const double got = use0 ? out[0].real() : out[1].real();
        scale = (ref >= 0) == (got >= 0) ? mag : -mag;
    } else {
        scale = std::abs(j0) >= std::abs(j1) ? j0 / out[0] : j1 / out[1];
    }
    for (auto& v : out) v *= scale;
    out.resize(nmax + 1);
    return out;
}

cplx spherical_j(std::size_t n, cplx x) { return spherical_j_sequence(n, x)[n]; }

double spherical_j(std::size_t n, double x) {
    return spherical_j_sequence(n, cplx(x, 0.0))[n].real();
}

}  // namespace chromatic
