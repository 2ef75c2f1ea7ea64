#include <algorithm>
#include <cmath>

#include "chromatic/basis_functions.hpp"
#include "chromatic/chromatic_core.hpp"
#include "chromatic/cli.hpp"
#include "chromatic/expansions.hpp"
#include "chromatic/orthopoly.hpp"

namespace chromatic {
namespace {

double log_factorial(std::size_t k) { return std::lgamma(static_cast<double>(k) + 1.0); }

InvariantResult skipped(std::string name, std::string why) {
    InvariantResult r;
    r.name = std::move(name);
    r.skipped = true;
    r.detail = std::move(why);
    return r;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const FamilySpec& family, std::size_t orders) {
    const std::size_t N = std::max<std::size_t>(orders, 2);
    std::vector<InvariantResult> out;
    const OperatorCalculus calc(family, N, 2 * N);
    const auto& table = calc.table();
    const auto& conv = calc.conversions();

    {
        double worst = 0.0;
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t m = 0; m <= N; ++m) {
                const cplx g = (n % 2 ? -1.0 : 1.0) * calc.compose_at_zero(n, m);
                worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
            }
        out.push_back({"orthonormality (-1)^n K^n K^m [m](0) = delta", worst, 1e-8, false,
                       "n,m <= " + std::to_string(N)});
    }

    out.push_back({"basis change d2k * k2d = I", calc.basis_change_residual(), 1e-9, false,
                   "extended precision product"});

    if (family.symmetric()) {
        double max_mag = 0.0, max_im = 0.0, odd = 0.0;
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t k = 0; k <= table.K; ++k) {
                const cplx v = table(n, k);
                max_mag = std::max(max_mag, std::abs(v));
                max_im = std::max(max_im, std::abs(v.imag()));
                if ((n + k) % 2) odd = std::max(odd, std::abs(v));
            }
        out.push_back({"symmetric family: b real", max_im / max_mag, 1e-12, false,
                       "max |Im b| / max |b|"});
        out.push_back({"symmetric family: b(n,k) = 0 for n+k odd", odd, 0.0, false,
                       "structural zeros are exact"});
    } else {
        out.push_back(skipped("symmetric family: b real", "family is not symmetric"));
        out.push_back(skipped("symmetric family: b(n,k) = 0 for n+k odd", "family is not symmetric"));
    }

    if (const auto M = family.weak_bound_M()) {
        const double p = family.growth_exponent();
        const std::size_t L = std::min<std::size_t>(N, 60);
        double worst_b = -1e300, worst_k = -1e300;
        for (std::size_t n = 0; n <= L; ++n)
            for (std::size_t k = 0; k <= L; ++k) {
                const double bv = std::abs(table(n, k));
                if (bv > 0.0)
                    worst_b = std::max(worst_b, std::log(bv) + (1 - p) * log_factorial(k) -
                                                    2.0 * k * std::log(*M + 1));
                const double kv = std::abs(conv.k2d_at(n, k));
                if (kv > 0.0)
                    worst_k = std::max(worst_k, std::log(kv) + p * log_factorial(k) -
                                                    n * std::log(3 * *M));
            }
        out.push_back({"coefficient bound |b| k!^(1-p) <= (M+1)^(2k)", std::exp(worst_b), 1.0, false,
                       "max ratio, n,k <= " + std::to_string(L)});
        out.push_back({"monomial bound |k2d| k!^p <= (3M)^n", std::exp(worst_k), 1.0, false,
                       "max ratio, n,k <= " + std::to_string(L)});

        double worst = 0.0;
        for (std::size_t n = 0; n <= 1000; ++n) {
            const double g = family.gamma(n), np = std::pow(n + 1.0, p);
            worst = std::max({worst, g / (*M * np), np / (*M * g), std::abs(family.beta(n)) / (*M * g)});
        }
        out.push_back({"weak boundedness of gamma, beta", worst, 1.0, false, "max ratio, n <= 1000"});
    } else {
        for (const char* name : {"coefficient bound |b| k!^(1-p) <= (M+1)^(2k)",
                                 "monomial bound |k2d| k!^p <= (3M)^n", "weak boundedness of gamma, beta"})
            out.push_back(skipped(name, "not weakly bounded (p = 1)"));
    }

    {
        const auto rule = gauss_quadrature(family, N + 1);
        std::vector<std::vector<double>> P;
        for (double x : rule.nodes) P.push_back(eval_all_p(family, N, x).values);
        double worst = 0.0;
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t m = 0; m <= n; ++m) {
                double s = 0.0;
                for (std::size_t j = 0; j < rule.nodes.size(); ++j) s += rule.weights[j] * P[j][n] * P[j][m];
                worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
            }
        out.push_back({"Gauss quadrature orthonormality", worst, 1e-9, false,
                       std::to_string(N + 1) + " nodes"});
    }

    {
        double worst = 0.0;
        std::string oracle;
        if (has_analytic_moments(family)) {
            oracle = "closed form";
            for (std::size_t k = 0; k <= 30; ++k) {
                const double a = moment_analytic(family, k), j = moment_jacobi_matrix(family, k);
                worst = std::max(worst, std::abs(a - j) / std::max(1.0, std::abs(a)));
            }
        } else {
            oracle = "Gauss quadrature";
            const auto rule = gauss_quadrature(family, 20);
            for (std::size_t k = 0; k <= 30; ++k) {
                double q = 0.0, scale = 0.0;
                for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                    const double t = rule.weights[j] * std::pow(rule.nodes[j], static_cast<double>(k));
                    q += t;
                    scale += std::abs(t);
                }
                const double jm = moment_jacobi_matrix(family, k);
                worst = std::max(worst, std::abs(q - jm) / std::max(1.0, scale));
            }
        }
        out.push_back({"moments: Jacobi matrix vs " + oracle, worst, 1e-10, false, "k <= 30"});
    }

    {
        // omega, sigma inside the support of every family
        const double pts[][2] = {{0.3, 1.1}, {0.5, 2.0}, {1.7, 0.2}};
        double worst = 0.0;
        for (const auto& pr : pts) {
            const auto a = eval_all_p(family, N + 1, pr[0], true), b = eval_all_p(family, N + 1, pr[1]);
            double s = 0.0, sa = 0.0, sb = 0.0;
            for (std::size_t k = 0; k <= N; ++k) {
                s += a.values[k] * b.values[k];
                sa += a.values[k] * a.values[k];
                sb += b.values[k] * b.values[k];
            }
            const double scale = std::sqrt(sa * sb);
            worst = std::max(worst, std::abs(cd_kernel(family, N, pr[0], pr[1]) - s) / scale);
            worst = std::max(worst, std::abs(cd_diagonal(family, N, pr[0]) - sa) / sa);
        }
        out.push_back({"Christoffel-Darboux kernel vs direct sum", worst, 1e-9, false, "relative"});
    }

    {
        // for p = 1 the double-precision jets lose about one digit per order
        const std::size_t L = family.weakly_bounded() ? N : std::min<std::size_t>(N, 12);
        TaylorJet jet;
        for (std::size_t k = 0; k <= L; ++k)
            jet.coefficients.push_back(cplx(1.0 / (k + 1.0), (k % 3 == 0 ? 0.5 : -0.25) / (k + 2.0)));
        const auto back = calc.to_taylor(calc.to_chromatic(jet, L), L);
        double worst = 0.0;
        for (std::size_t k = 0; k <= L; ++k)
            worst = std::max(worst, std::abs(back.coefficients[k] - jet.coefficients[k]) /
                                        std::abs(jet.coefficients[k]));
        out.push_back({"jet round trip Taylor -> chromatic -> Taylor", worst, 1e-9, false,
                       "relative, order " + std::to_string(L)});
    }

    if (has_closed_form(family)) {
        const std::size_t L = std::min<std::size_t>(N, 20);
        const BasisEvaluator ev(family, L);
        const double guard = default_radius_guard(family);
        double worst = 0.0;
        for (double t : {-2.5, -0.4, 0.0, 0.3, 1.0, 3.0}) {
            if (std::abs(t) >= 0.9 * guard) continue;
            for (std::size_t n = 0; n <= L; ++n)
                worst = std::max(worst, std::abs(ev(n, t) - kbasis_closed(family, n, t)));
        }
        out.push_back({"basis series vs closed form", worst, 1e-8, false, "n <= " + std::to_string(L)});
    } else {
        out.push_back(skipped("basis series vs closed form", "no closed form for this family"));
    }

    out.push_back({"exponential identity sum (-1)^k K^k[e](0) K^k[m](z) = e^{iwz}",
                   identity_exponential(family, 0.5, cplx(0.3, 0.0), N), 1e-8, false, "w = 0.5, z = 0.3"});

    return out;
}

}  // namespace chromatic
