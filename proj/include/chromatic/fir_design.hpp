/**
 * @file fir_design.hpp
 * FIR filters c_{-N..N} whose response sum_k c_k e^{i w k} approximates
 * i^n p_n(w) on a passband, so that sum_k c_k f(t+k) ~ K^n[f](t) for
 * band-limited f sampled at the integers.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "chromatic/families.hpp"

namespace chromatic {

struct FirFilter {
    FamilyId family;
    std::size_t order = 0;       // n
    std::size_t half_width = 0;  // N, 2N+1 taps
    std::vector<double> taps;    // taps[k + N] = c_k
    double passband_edge = 0.9 * std::numbers::pi;
    double stopband_edge = 0.98 * std::numbers::pi;

    double tap(long k) const { return taps[static_cast<std::size_t>(k + static_cast<long>(half_width))]; }
};

struct DesignReport {
    double passband_max_error = 0.0;
    double stopband_max_magnitude = 0.0;
    std::size_t grid_size = 0;
    double condition_number = 0.0;
    std::size_t refine_iterations = 0;
};

struct FirDesignOptions {
    double passband_edge = 0.9 * std::numbers::pi;
    double stopband_edge = 0.98 * std::numbers::pi;
    std::size_t grid_density = 16;
    /// Stopband weight relative to a passband weight of 1.
    double weight_ratio = 10.0;
    /// Lawson reweighting passes after the least-squares solve; each pass
    /// moves the weighted error toward equiripple (minimax). 0 = plain LS.
    std::size_t refine_iterations = 0;
};

struct FirDesign {
    FirFilter filter;
    DesignReport report;
};

/// Target i^n p_n(w). Requires a compactly supported family and n <= 2N.
/// Symmetric families get a cosine (even n) or sine (odd n) half system so
/// tap parity holds exactly. DomainError for non-compact families,
/// NumericError if the design matrix is numerically rank deficient.
FirDesign design_ls(const FamilySpec& family, std::size_t n, std::size_t N,
                    const FirDesignOptions& options = {});

/// Contrast design for the normalised ordinary derivative, target i^n (w/pi)^n.
FirDesign design_derivative_ls(std::size_t n, std::size_t N, const FirDesignOptions& options = {});

std::complex<double> transfer_function(const FirFilter& filter, double omega);

/// sum_k c_k samples[t + k]; samples[j] holds f(j). ArgumentError when
/// [t-N, t+N] leaves the sample range.
std::complex<double> apply(const FirFilter& filter, const std::vector<std::complex<double>>& samples,
                           long t);
std::complex<double> apply(const FirFilter& filter, const std::vector<double>& samples, long t);

struct DecayRow {
    long m;
    double magnitude;  // |K^n[sinc](t - m)|
};

/// Legendre K^n[sinc](t - m) over |m| <= range: the slow O(1/|m|) decay that
/// makes Nyquist-rate evaluation of chromatic derivatives hard.
std::vector<DecayRow> shannon_decay_report(std::size_t n, double t, long range);

}  // namespace chromatic
