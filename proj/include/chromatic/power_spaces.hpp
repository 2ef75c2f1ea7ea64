/**
 * @file power_spaces.hpp
 * Growth conditions C1-C7 on gamma_n and the normalised energy sequences
 *   nu_n = sum_{k<=n} |K^k[f](t)|^2 / sum_{k<=n} 1/gamma_k
 * whose limits give the power seminorm on almost periodic functions.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chromatic/expansions.hpp"
#include "chromatic/families.hpp"

namespace chromatic {

struct SequenceDiagnostics {
    std::vector<double> values;  // n = 0..N
    double averaged_tail = 0.0;  // Cesaro mean over n in [N/2, N]
    double oscillation = 0.0;    // max - min over the same range
    double last = 0.0;
    std::vector<std::complex<double>> complex_values;  // sigma only
};

struct ConditionFlag {
    std::string name;         // "C1" .. "C7"
    std::string statement;
    double evidence = 0.0;    // see statement; partial sums for C4-C7
    double block_ratio = 0.0; // dyadic block ratio for series, growth ratio for C1
    bool numeric = false;     // verdict from the finite horizon
    std::optional<bool> analytic;  // known closed-form verdict
    bool holds() const { return analytic.value_or(numeric); }
};

struct ConditionReport {
    FamilyId family;
    std::size_t horizon = 0;
    double kappa = 0.0;
    std::array<ConditionFlag, 7> conditions;
    std::string note;
    bool all_hold() const;
};

/// Finite-horizon evidence for C1-C7. Series conditions compare the sums over
/// [H/4, H/2) and [H/2, H): a ratio below 0.95 is read as convergence.
/// Requires horizon >= 100.
ConditionReport check_conditions(const FamilySpec& family, std::size_t horizon, double kappa);

/// sum_{k<=n} 1/gamma_k for n = 0..N
std::vector<double> inverse_gamma_sums(const FamilySpec& family, std::size_t N);

/// Exponentials, cosines and constants stream p_k through the recurrence
/// (NumericError if |p_k| > 1e100); other functions go through their jets.
SequenceDiagnostics nu_sequence(const FamilySpec& family, const FunctionSpec& f, double t,
                                std::size_t N);

/// beta_n = gamma_n (|K^n[f](t)|^2 + |K^{n+1}[f](t)|^2)
SequenceDiagnostics beta_sequence(const FamilySpec& family, const FunctionSpec& f, double t,
                                  std::size_t N);

/// sigma_n = sum_{k<=n} p_k(omega) p_k(sigma) e^{i(omega-sigma)t} / sum 1/gamma_k;
/// values hold |sigma_n|. ArgumentError when omega == sigma.
SequenceDiagnostics sigma_sequence(const FamilySpec& family, double omega, double sigma, double t,
                                   std::size_t N);

struct ChebyshevNorm {
    double formula_value;
    double direct_value;
};

/// x = omega/pi in (-1, 1); DomainError otherwise.
ChebyshevNorm chebyshev_exponential_norm(double x, std::size_t n);

/// sqrt of the nu limit for e^{i omega t} under hermite; Cesaro-averaged tail
/// when averaging is set, last value otherwise.
double hermite_exponential_norm(double omega, std::size_t N, bool averaging = true);

/// e^{omega^2/2} / (4 pi)^{1/4}
double hermite_norm_closed_form(double omega);

}  // namespace chromatic
