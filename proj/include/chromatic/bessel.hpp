/**
 * @file bessel.hpp
 * Bessel J_n and spherical Bessel j_n of integer order for real and complex
 * argument. Ascending series for |x| < 1, Miller backward recurrence
 * otherwise. Absolute accuracy ~1e-14 for n <= 64 and |x| <= 40 on the
 * real axis.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chromatic {

/// J_0(x) .. J_nmax(x)
std::vector<std::complex<double>> bessel_j_sequence(std::size_t nmax, std::complex<double> x);
std::complex<double> bessel_j(std::size_t n, std::complex<double> x);
double bessel_j(std::size_t n, double x);

/// j_0(x) .. j_nmax(x), with j_n(x) = sqrt(pi/(2x)) J_{n+1/2}(x)
std::vector<std::complex<double>> spherical_j_sequence(std::size_t nmax,
                                                       std::complex<double> x);
std::complex<double> spherical_j(std::size_t n, std::complex<double> x);
double spherical_j(std::size_t n, double x);

}  // namespace chromatic
