/**
 * @file basis_functions.hpp
 * m(z) and K^n[m](z): Taylor series from the coefficient table, and the
 * closed forms available for six of the families.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "chromatic/chromatic_core.hpp"
#include "chromatic/families.hpp"

namespace chromatic {

struct SeriesEvalConfig {
    std::size_t max_terms = 400;
    double tail_tolerance = 1e-16;
    /// Largest |z| accepted for families with p = 1. Unset means the family
    /// default (laguerre 0.5, herron 0.7); ignored for weakly bounded families.
    std::optional<double> radius_guard;
};

/// +inf for weakly bounded families.
double default_radius_guard(const FamilySpec& family);

struct SeriesEvaluation {
    cplx value;
    std::size_t terms = 0;    // highest Taylor index used
    double tail_bound = 0.0;  // rigorous bound on the discarded tail
    double rounding_estimate = 0.0;  // eps * sum of |terms|, the cancellation error scale
};

/// Sums K^n[m](z) = sum_k b(n,k) z^k. The discarded tail is bounded term by
/// term with |b(n,k)| <= min((M+1)^{2k} / k!^{1-p}, sqrt(mu_{2k}) / k!),
/// the first bound only for weakly bounded families.
class BasisEvaluator {
public:
    BasisEvaluator(const FamilySpec& family, std::size_t n_max, SeriesEvalConfig cfg = {});

    const FamilySpec& family() const { return calculus_->family(); }
    std::size_t n_max() const { return calculus_->N(); }
    const SeriesEvalConfig& config() const { return cfg_; }
    const OperatorCalculus& calculus() const { return *calculus_; }

    SeriesEvaluation evaluate(std::size_t n, cplx z) const;
    cplx operator()(std::size_t n, cplx z) const { return evaluate(n, z).value; }
    /// K^0[m](z) .. K^n[m](z)
    std::vector<cplx> all(std::size_t n, cplx z) const;

private:
    std::vector<double> tail_sums(cplx z) const;

    std::shared_ptr<const OperatorCalculus> calculus_;
    SeriesEvalConfig cfg_;
    double radius_guard_;
    std::vector<double> log_coefficient_bound_;  // per Taylor index, n-independent
};

/// Shared, lazily built calculus with at least the requested horizon.
std::shared_ptr<const OperatorCalculus> shared_calculus(const FamilySpec& family, std::size_t N,
                                                        std::size_t K);

cplx kbasis_series(const FamilySpec& family, std::size_t n, cplx z,
                   const SeriesEvalConfig& cfg = {});

bool has_closed_form(const FamilySpec& family);

/// UnsupportedError for gegenbauer and jacobi.
cplx kbasis_closed(const FamilySpec& family, std::size_t n, cplx z);

/// m(z) = K^0[m](z) by series.
cplx mother_function(const FamilySpec& family, cplx z, const SeriesEvalConfig& cfg = {});

}  // namespace chromatic
