/**
 * @file chromatic_core.hpp
 * Coefficient tables of the basis functions K^n[m], the change of basis
 * between {D^n} and {K^n}, and jet conversions.
 *
 * Everything is computed internally in 100-digit binary floating point and
 * rounded to double on output: the row recurrences lose roughly one digit
 * per row, so double arithmetic is useless beyond n ~ 20.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "chromatic/families.hpp"

namespace chromatic {

using cplx = std::complex<double>;

/// b(n, k) = (K^n o D^k)[m](0) / k!, the Taylor coefficients of K^n[m](z).
struct ChromaticTable {
    FamilyId family;
    std::size_t N = 0;  // rows 0..N
    std::size_t K = 0;  // columns 0..K
    std::vector<cplx> b;  // row-major (N+1) x (K+1)

    cplx operator()(std::size_t n, std::size_t k) const { return b[n * (K + 1) + k]; }
};

struct ConversionMatrices {
    FamilyId family;
    std::size_t N = 0;
    std::vector<cplx> k2d;  // (N+1)^2, K^n = sum_k k2d(n,k) D^k
    std::vector<cplx> d2k;  // (N+1)^2, D^n = sum_k d2k(n,k) K^k

    cplx k2d_at(std::size_t n, std::size_t k) const { return k2d[n * (N + 1) + k]; }
    cplx d2k_at(std::size_t n, std::size_t k) const { return d2k[n * (N + 1) + k]; }
};

/// coefficients[k] = f^(k)(center) / k!
struct TaylorJet {
    cplx center{};
    std::vector<cplx> coefficients;
};

/// values[n] = K^n[f](center)
struct ChromaticJet {
    FamilyId family;
    cplx center{};
    std::vector<cplx> values;
};

/// Owns the extended-precision tables for one family and horizon.
/// Immutable after construction; safe to share between threads.
class OperatorCalculus {
public:
    /// K = 0 selects the default 2N + 32. Throws ArgumentError if K < N.
    OperatorCalculus(const FamilySpec& family, std::size_t N, std::size_t K = 0);
    ~OperatorCalculus();
    OperatorCalculus(OperatorCalculus&&) noexcept;
    OperatorCalculus& operator=(OperatorCalculus&&) noexcept;

    const FamilySpec& family() const;
    std::size_t N() const;
    std::size_t K() const;

    const ChromaticTable& table() const;
    const ConversionMatrices& conversions() const;

    /// mu_k for k <= 2K, rounded from the extended computation.
    double moment(std::size_t k) const;
    /// sqrt(mu_{2k}) / k!, a bound on |b(n,k)| valid for every n (k <= K).
    double coefficient_bound(std::size_t k) const;
    /// log of coefficient_bound(k); finite where the bound itself underflows.
    double log_coefficient_bound(std::size_t k) const;

    ChromaticJet to_chromatic(const TaylorJet& jet, std::size_t n) const;
    TaylorJet to_taylor(const ChromaticJet& jet, std::size_t n) const;

    /// (K^n o K^m)[m](0); needs n, m <= N.
    cplx compose_at_zero(std::size_t n, std::size_t m) const;

    /// max |d2k * k2d - I| entry, with the product formed before rounding.
    double basis_change_residual() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ChromaticTable build_table(const FamilySpec& family, std::size_t N, std::size_t K);
ConversionMatrices conversion_matrices(const FamilySpec& family, std::size_t N);
ChromaticJet chromatic_jet_from_taylor(const FamilySpec& family, const TaylorJet& jet,
                                       std::size_t N);
TaylorJet taylor_from_chromatic_jet(const FamilySpec& family, const ChromaticJet& cjet,
                                    std::size_t N);
cplx compose_at_zero(const FamilySpec& family, std::size_t n, std::size_t m);

/// i^k for integer k >= 0 (exact).
inline cplx i_pow(std::size_t k) {
    switch (k % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace chromatic
