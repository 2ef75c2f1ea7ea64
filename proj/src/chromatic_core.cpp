#include "chromatic/chromatic_core.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "detail/recurrence.hpp"
#include "chromatic/errors.hpp"

namespace chromatic {
namespace {

using hp = boost::multiprecision::cpp_bin_float_100;

struct hp_complex {
    hp re, im;
};

hp_complex to_hp(cplx z) { return {hp(z.real()), hp(z.imag())}; }

cplx to_double(const hp_complex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

// Multiply by i^k.
hp_complex rotate(hp_complex z, std::size_t k) {
    switch (k % 4) {
        case 0: return z;
        case 1: return {-z.im, z.re};
        case 2: return {-z.re, -z.im};
        default: return {z.im, -z.re};
    }
}

}  // namespace

struct OperatorCalculus::Impl {
    FamilySpec family;
    std::size_t N;
    std::size_t K;
    std::vector<hp> gamma;  // gamma_0 .. gamma_N
    std::vector<hp> mu;     // mu_0 .. mu_{2K}
    std::vector<hp> fact;   // 0! .. K!
    // Real parts of the phase factorisation
    //   b(n,k) = i^{n+k} r(n,k),  k2d(n,k) = i^{n-k} s(n,k);
    // s(n,k) are the monomial coefficients of p_n.
    std::vector<hp> r;  // (N+1) x (K+1)
    std::vector<hp> s;  // (N+1) x (N+1)
    std::vector<double> mu_d;
    std::vector<double> bound_d;
    std::vector<double> log_bound_d;
    ChromaticTable table;
    ConversionMatrices conv;

    Impl(const FamilySpec& f, std::size_t n_max, std::size_t k_max)
        : family(f), N(n_max), K(k_max) {
        compute_moments();
        compute_rows();
        compute_monomials();
        fill_public();
    }

    const hp& R(std::size_t n, std::size_t k) const { return r[n * (K + 1) + k]; }
    const hp& S(std::size_t n, std::size_t k) const { return s[n * (N + 1) + k]; }

    void compute_moments() {
        const std::size_t L = 2 * K + 2;
        const std::size_t dim = L / 2 + 2;
        std::vector<hp> diag(dim), off(dim);
        for (std::size_t n = 0; n < dim; ++n) {
            diag[n] = -detail::beta_coefficient<hp>(family.id(), n);
            off[n] = detail::gamma_coefficient<hp>(family.id(), n);
        }
        mu.assign(L + 1, hp(0));
        mu[0] = 1;
        std::vector<hp> v(dim, hp(0)), w(dim, hp(0));
        v[0] = 1;
        // v = J^s e_0 is supported on [0, s]; w = J v on [0, s+1].
        for (std::size_t s = 0; 2 * s + 2 <= L; ++s) {
            for (std::size_t i = 0; i <= s + 1; ++i) {
                hp acc = diag[i] * v[i];
                if (i > 0) acc += off[i - 1] * v[i - 1];
                if (i + 1 < dim) acc += off[i] * v[i + 1];
                w[i] = acc;
            }
            hp odd = 0, even = 0;
            for (std::size_t i = 0; i <= s + 1; ++i) {
                odd += v[i] * w[i];
                even += w[i] * w[i];
            }
            mu[2 * s + 1] = odd;
            mu[2 * s + 2] = even;
            std::swap(v, w);
        }
        fact.assign(K + 1, hp(1));
        for (std::size_t k = 1; k <= K; ++k) fact[k] = fact[k - 1] * k;
        gamma.resize(N + 1);
        for (std::size_t n = 0; n <= N; ++n)
            gamma[n] = detail::gamma_coefficient<hp>(family.id(), n);
    }

    void compute_rows() {
        // Row n needs row n-1 one column further out, so row 0 is carried to
        // K + N and every stored column is exact (no truncated tail).
        const std::size_t width = K + N + 1;
        std::vector<hp> prev(width, hp(0)), cur(width), next(width);
        hp inv_fact = 1;
        for (std::size_t k = 0; k < width; ++k) {
            if (k > 0) inv_fact /= k;
            cur[k] = mu[k] * inv_fact;
        }
        r.assign((N + 1) * (K + 1), hp(0));
        hp g_prev = 1;
        for (std::size_t n = 0;; ++n) {
            for (std::size_t k = n; k <= K; ++k) r[n * (K + 1) + k] = cur[k];
            if (n == N) break;
            const hp beta = detail::beta_coefficient<hp>(family.id(), n);
            const std::size_t last = width - n - 2;
            for (std::size_t k = 0; k <= last; ++k) {
                if (k < n + 1) {
                    next[k] = 0;  // structural zero below the diagonal
                    continue;
                }
                next[k] = (hp(k + 1) * cur[k + 1] + beta * cur[k] - g_prev * prev[k]) / gamma[n];
            }
            g_prev = gamma[n];
            std::swap(prev, cur);
            std::swap(cur, next);
        }
    }

    void compute_monomials() {
        s.assign((N + 1) * (N + 1), hp(0));
        s[0] = 1;
        hp g_prev = 1;
        for (std::size_t n = 0; n < N; ++n) {
            const hp beta = detail::beta_coefficient<hp>(family.id(), n);
            for (std::size_t k = 0; k <= n + 1; ++k) {
                hp acc = 0;
                if (k > 0) acc += S(n, k - 1);
                if (k <= n) acc += beta * S(n, k);
                if (n > 0 && k + 1 <= n) acc -= g_prev * S(n - 1, k);
                s[(n + 1) * (N + 1) + k] = acc / gamma[n];
            }
            g_prev = gamma[n];
        }
    }

    void fill_public() {
        table.family = family.id();
        table.N = N;
        table.K = K;
        table.b.assign((N + 1) * (K + 1), cplx{});
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t k = n; k <= K; ++k)
                table.b[n * (K + 1) + k] = i_pow(n + k) * static_cast<double>(R(n, k));

        conv.family = family.id();
        conv.N = N;
        conv.k2d.assign((N + 1) * (N + 1), cplx{});
        conv.d2k.assign((N + 1) * (N + 1), cplx{});
        for (std::size_t n = 0; n <= N; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                conv.k2d[n * (N + 1) + k] = i_pow(n + 4 - k % 4) * static_cast<double>(S(n, k));
                // d2k(n,k) = (-1)^k n! b(k,n)
                const hp mag = fact[n] * R(k, n);
                const cplx phase = i_pow(n + k) * (k % 2 ? -1.0 : 1.0);
                conv.d2k[n * (N + 1) + k] = phase * static_cast<double>(mag);
            }
        }

        mu_d.resize(mu.size());
        for (std::size_t k = 0; k < mu.size(); ++k) mu_d[k] = static_cast<double>(mu[k]);
        bound_d.resize(K + 1);
        log_bound_d.resize(K + 1);
        for (std::size_t k = 0; k <= K; ++k) {
            bound_d[k] = static_cast<double>(sqrt(mu[2 * k]) / fact[k]);
            log_bound_d[k] = static_cast<double>(log(mu[2 * k]) / 2 - log(fact[k]));
        }
    }
};

OperatorCalculus::OperatorCalculus(const FamilySpec& family, std::size_t N, std::size_t K) {
    if (K == 0) K = 2 * N + 32;
    if (K < N) throw ArgumentError("table needs K >= N");
    impl_ = std::make_unique<Impl>(family, N, K);
}

OperatorCalculus::~OperatorCalculus() = default;
OperatorCalculus::OperatorCalculus(OperatorCalculus&&) noexcept = default;
OperatorCalculus& OperatorCalculus::operator=(OperatorCalculus&&) noexcept = default;

const FamilySpec& OperatorCalculus::family() const { return impl_->family; }
std::size_t OperatorCalculus::N() const { return impl_->N; }
std::size_t OperatorCalculus::K() const { return impl_->K; }
const ChromaticTable& OperatorCalculus::table() const { return impl_->table; }
const ConversionMatrices& OperatorCalculus::conversions() const { return impl_->conv; }

double OperatorCalculus::moment(std::size_t k) const {
    if (k >= impl_->mu_d.size()) throw ArgumentError("moment index beyond table horizon");
    return impl_->mu_d[k];
}

double OperatorCalculus::coefficient_bound(std::size_t k) const {
    if (k > impl_->K) throw ArgumentError("bound index beyond table horizon");
    return impl_->bound_d[k];
}

double OperatorCalculus::log_coefficient_bound(std::size_t k) const {
    if (k > impl_->K) throw ArgumentError("bound index beyond table horizon");
    return impl_->log_bound_d[k];
}

ChromaticJet OperatorCalculus::to_chromatic(const TaylorJet& jet, std::size_t n) const {
    if (n > impl_->N) throw ArgumentError("chromatic order exceeds table horizon");
    if (jet.coefficients.size() < n + 1) throw ArgumentError("Taylor jet too short");
    std::vector<hp_complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        // jet[k] * i^{-k} * k!
        hp_complex z = rotate(to_hp(jet.coefficients[k]), 4 - k % 4);
        z.re *= impl_->fact[k];
        z.im *= impl_->fact[k];
        c[k] = z;
    }
    ChromaticJet out{impl_->family.id(), jet.center, std::vector<cplx>(n + 1)};
    for (std::size_t m = 0; m <= n; ++m) {
        hp_complex acc{0, 0};
        for (std::size_t k = 0; k <= m; ++k) {
            acc.re += c[k].re * impl_->S(m, k);
            acc.im += c[k].im * impl_->S(m, k);
        }
        out.values[m] = to_double(rotate(acc, m));
    }
    return out;
}

TaylorJet OperatorCalculus::to_taylor(const ChromaticJet& cjet, std::size_t n) const {
    if (n > impl_->N) throw ArgumentError("Taylor order exceeds table horizon");
    if (cjet.values.size() < n + 1) throw ArgumentError("chromatic jet too short");
    std::vector<hp_complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = rotate(to_hp(cjet.values[k]), (3 * k) % 4);
    TaylorJet out{cjet.center, std::vector<cplx>(n + 1)};
    for (std::size_t m = 0; m <= n; ++m) {
        hp_complex acc{0, 0};
        for (std::size_t k = 0; k <= m; ++k) {
            acc.re += c[k].re * impl_->R(k, m);
            acc.im += c[k].im * impl_->R(k, m);
        }
        out.coefficients[m] = to_double(rotate(acc, m));
    }
    return out;
}

cplx OperatorCalculus::compose_at_zero(std::size_t n, std::size_t m) const {
    if (n > impl_->N || m > impl_->N) throw ArgumentError("compose order exceeds table horizon");
    hp acc = 0;
    for (std::size_t k = m; k <= n; ++k) acc += impl_->S(n, k) * impl_->fact[k] * impl_->R(m, k);
    return i_pow(n + m) * static_cast<double>(acc);
}

double OperatorCalculus::basis_change_residual() const {
    const std::size_t N = impl_->N;
    hp worst = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            // (d2k k2d)(n,j) = i^{n-j} n! sum_k r(k,n) s(k,j)
            hp acc = 0;
            for (std::size_t k = j; k <= n; ++k) acc += impl_->R(k, n) * impl_->S(k, j);
            acc *= impl_->fact[n];
            if (n == j) acc -= 1;
            worst = std::max(worst, hp(abs(acc)));
        }
    }
    return static_cast<double>(worst);
}

ChromaticTable build_table(const FamilySpec& family, std::size_t N, std::size_t K) {
    if (K < N) throw ArgumentError("build_table needs K >= N");
    return OperatorCalculus(family, N, K).table();
}

ConversionMatrices conversion_matrices(const FamilySpec& family, std::size_t N) {
    return OperatorCalculus(family, N, N).conversions();
}

ChromaticJet chromatic_jet_from_taylor(const FamilySpec& family, const TaylorJet& jet,
                                       std::size_t N) {
    if (jet.coefficients.size() < N + 1) throw ArgumentError("Taylor jet too short");
    return OperatorCalculus(family, N, N).to_chromatic(jet, N);
}

TaylorJet taylor_from_chromatic_jet(const FamilySpec& family, const ChromaticJet& cjet,
                                    std::size_t N) {
    if (cjet.values.size() < N + 1) throw ArgumentError("chromatic jet too short");
    return OperatorCalculus(family, N, N).to_taylor(cjet, N);
}

cplx compose_at_zero(const FamilySpec& family, std::size_t n, std::size_t m) {
    return OperatorCalculus(family, std::max(n, m), std::max(n, m)).compose_at_zero(n, m);
}

}  // namespace chromatic
