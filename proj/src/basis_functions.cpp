#include "chromatic/basis_functions.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "chromatic/bessel.hpp"
#include "chromatic/errors.hpp"

namespace chromatic {
namespace {

struct CacheEntry {
    std::size_t N;
    std::size_t K;
    std::shared_ptr<const OperatorCalculus> calculus;
};

cplx int_pow(cplx z, std::size_t n) {
    cplx out = 1.0;
    while (n) {
        if (n & 1) out *= z;
        z *= z;
        n >>= 1;
    }
    return out;
}

std::mutex cache_mutex;
std::multimap<std::string, CacheEntry> cache;

}  // namespace

std::shared_ptr<const OperatorCalculus> shared_calculus(const FamilySpec& family, std::size_t N,
                                                        std::size_t K) {
    const std::string key = family.name();
    std::lock_guard lock(cache_mutex);
    auto [lo, hi] = cache.equal_range(key);
    for (auto it = lo; it != hi; ++it)
        if (it->second.N >= N && it->second.K >= K) return it->second.calculus;
    const std::size_t n_alloc = ((N + 31) / 32) * 32;
    const std::size_t k_alloc = std::max(K, n_alloc);
    auto built = std::make_shared<const OperatorCalculus>(family, n_alloc, k_alloc);
    cache.emplace(key, CacheEntry{n_alloc, k_alloc, built});
    return built;
}

double default_radius_guard(const FamilySpec& family) {
    switch (family.id().kind) {
        case FamilyKind::laguerre:
            return 0.5;
        case FamilyKind::herron:
            return 0.7;
        default:
            return std::numeric_limits<double>::infinity();
    }
}

BasisEvaluator::BasisEvaluator(const FamilySpec& family, std::size_t n_max, SeriesEvalConfig cfg)
    : cfg_(cfg) {
    if (cfg_.max_terms == 0) throw ArgumentError("max_terms must be positive");
    if (!(cfg_.tail_tolerance > 0.0)) throw ArgumentError("tail_tolerance must be positive");
    if (cfg_.max_terms < n_max) cfg_.max_terms = n_max;
    calculus_ = shared_calculus(family, n_max, cfg_.max_terms);
    radius_guard_ = family.weakly_bounded()
                        ? std::numeric_limits<double>::infinity()
                        : cfg_.radius_guard.value_or(default_radius_guard(family));

    log_coefficient_bound_.resize(cfg_.max_terms + 1);
    const double p = family.growth_exponent();
    const auto M = family.weak_bound_M();
    for (std::size_t k = 0; k <= cfg_.max_terms; ++k) {
        double bound = calculus_->log_coefficient_bound(k);
        if (M) bound = std::min(bound, 2.0 * k * std::log(*M + 1.0) - (1.0 - p) * std::lgamma(k + 1.0));
        log_coefficient_bound_[k] = bound;
    }
}

// tail[k] bounds sum_{j>k} |b(n,j)| |z|^j for any n.
std::vector<double> BasisEvaluator::tail_sums(cplx z) const {
    const std::size_t K = cfg_.max_terms;
    const double az = std::abs(z);
    std::vector<double> tail(K + 1, 0.0);
    if (az == 0.0) return tail;
    // logs: |z|^k overflows long before the bound underflows back
    std::vector<double> a(K + 1);
    for (std::size_t k = 0; k <= K; ++k)
        a[k] = std::exp(log_coefficient_bound_[k] + static_cast<double>(k) * std::log(az));
    // Beyond the horizon continue geometrically. For p = 1 the coefficient
    // ratio tends to 2 rho |z| from below, so take the larger of the two.
    double ratio = std::exp(log_coefficient_bound_[K] - log_coefficient_bound_[K - 1]) * az;
    ratio = std::max(ratio, 2.0 * family().rho() * az);
    double beyond = std::numeric_limits<double>::infinity();
    if (ratio < 1.0) beyond = a[K] * ratio / (1.0 - ratio);
    tail[K] = beyond;
    for (std::size_t k = K; k-- > 0;) tail[k] = tail[k + 1] + a[k + 1];
    return tail;
}

SeriesEvaluation BasisEvaluator::evaluate(std::size_t n, cplx z) const {
    if (n > n_max()) throw ArgumentError("order exceeds evaluator horizon");
    if (std::abs(z) > radius_guard_)
        throw DomainError("|z| = " + std::to_string(std::abs(z)) + " beyond radius guard " +
                          std::to_string(radius_guard_) + " for " + family().name());
    const auto tail = tail_sums(z);
    const auto& table = calculus_->table();
    const std::size_t K = cfg_.max_terms;

    std::size_t stop = n;
    while (stop < K && tail[stop] > cfg_.tail_tolerance) ++stop;
    if (!(tail[stop] <= cfg_.tail_tolerance))
        throw ConvergenceError("series for K^" + std::to_string(n) + "[m] at |z| = " +
                               std::to_string(std::abs(z)) + " not converged within " +
                               std::to_string(K) + " terms");

    cplx power = 1.0;
    for (std::size_t k = 0; k < n; ++k) power *= z;
    cplx sum = 0.0;
    double magnitude = 0.0;
    for (std::size_t k = n; k <= stop; ++k) {
        const cplx term = table(n, k) * power;
        sum += term;
        magnitude += std::abs(term);
        power *= z;
    }
    return {sum, stop, tail[stop], magnitude * std::numeric_limits<double>::epsilon()};
}

std::vector<cplx> BasisEvaluator::all(std::size_t n, cplx z) const {
    std::vector<cplx> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out[j] = evaluate(j, z).value;
    return out;
}

cplx kbasis_series(const FamilySpec& family, std::size_t n, cplx z, const SeriesEvalConfig& cfg) {
    return BasisEvaluator(family, n, cfg)(n, z);
}

cplx mother_function(const FamilySpec& family, cplx z, const SeriesEvalConfig& cfg) {
    return kbasis_series(family, 0, z, cfg);
}

bool has_closed_form(const FamilySpec& family) {
    const auto k = family.id().kind;
    return k != FamilyKind::gegenbauer && k != FamilyKind::jacobi;
}

cplx kbasis_closed(const FamilySpec& family, std::size_t n, cplx z) {
    constexpr double pi = 3.14159265358979323846;
    const double sign = n % 2 ? -1.0 : 1.0;
    switch (family.id().kind) {
        case FamilyKind::legendre:
            return sign * std::sqrt(2.0 * n + 1.0) * spherical_j(n, pi * z);
        case FamilyKind::chebyshev_t:
            if (n == 0) return bessel_j(0, pi * z);
            return sign * std::sqrt(2.0) * bessel_j(n, pi * z);
        case FamilyKind::chebyshev_u: {
            const auto j = bessel_j_sequence(n + 2, pi * z);
            return sign * (j[n] + j[n + 2]);
        }
        case FamilyKind::hermite: {
            const double c = std::exp(-0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0)));
            return sign * c * int_pow(z, n) * std::exp(-z * z / 4.0);
        }
        case FamilyKind::laguerre: {
            const cplx d = 1.0 - cplx(0.0, 1.0) * z;
            return int_pow(-z / d, n) / d;
        }
        case FamilyKind::herron:
            return sign * int_pow(std::tanh(z), n) / std::cosh(z);
        default:
            break;
    }
    throw UnsupportedError("no closed form for K^n[m] of " + family.name() +
                           "; use kbasis_series");
}

}  // namespace chromatic
