#include "chromatic/orthopoly.hpp"

#include "chromatic/errors.hpp"

namespace chromatic {

PolyEvaluation eval_all_p(const FamilySpec& family, std::size_t N, double omega,
                          bool with_derivatives) {
    PolyEvaluation out;
    out.family = family.id();
    out.degree = N;
    out.omega = omega;
    out.values.resize(N + 1);
    out.values[0] = 1.0;
    std::vector<double> d;
    if (with_derivatives) d.assign(N + 1, 0.0);

    double g_prev = 1.0;  // gamma_{-1}
    for (std::size_t n = 0; n < N; ++n) {
        const double g = family.gamma(n);
        const double shift = omega + family.beta(n);
        const double pm1 = n > 0 ? out.values[n - 1] : 0.0;
        out.values[n + 1] = (shift * out.values[n] - g_prev * pm1) / g;
        if (with_derivatives) {
            const double dm1 = n > 0 ? d[n - 1] : 0.0;
            d[n + 1] = (out.values[n] + shift * d[n] - g_prev * dm1) / g;
        }
        g_prev = g;
    }
    if (with_derivatives) out.derivative_values = std::move(d);
    return out;
}

double eval_p(const FamilySpec& family, std::size_t N, double omega) {
    double prev = 0.0, cur = 1.0, g_prev = 1.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double g = family.gamma(n);
        const double next = ((omega + family.beta(n)) * cur - g_prev * prev) / g;
        prev = cur;
        cur = next;
        g_prev = g;
    }
    return cur;
}

double cd_kernel(const FamilySpec& family, std::size_t N, double omega, double sigma) {
    if (omega == sigma)
        throw ArgumentError("cd_kernel needs omega != sigma; use cd_diagonal");
    const auto p = eval_all_p(family, N + 1, omega);
    const auto q = eval_all_p(family, N + 1, sigma);
    const double num = p.values[N + 1] * q.values[N] - p.values[N] * q.values[N + 1];
    return family.gamma(N) * num / (omega - sigma);
}

double cd_diagonal(const FamilySpec& family, std::size_t N, double omega) {
    const auto p = eval_all_p(family, N + 1, omega, true);
    const auto& d = *p.derivative_values;
    return family.gamma(N) * (d[N + 1] * p.values[N] - p.values[N + 1] * d[N]);
}

}  // namespace chromatic
