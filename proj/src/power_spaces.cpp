#include "chromatic/power_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "chromatic/errors.hpp"

namespace chromatic {
namespace {

using cplx = std::complex<double>;

// Streams p_0(w), p_1(w), ... through the recurrence.
class PolyStream {
public:
    PolyStream(const FamilySpec& family, double omega) : family_(family), omega_(omega) {}

    double value() const { return cur_; }

    void advance() {
        const double g = family_.gamma(n_);
        const double next = ((omega_ + family_.beta(n_)) * cur_ - g_prev_ * prev_) / g;
        prev_ = cur_;
        cur_ = next;
        g_prev_ = g;
        ++n_;
        if (!(std::abs(cur_) <= 1e100))
            throw NumericError("|p_" + std::to_string(n_) + "(" + std::to_string(omega_) +
                               ")| exceeds 1e100 for " + family_.name());
    }

private:
    const FamilySpec& family_;
    double omega_;
    std::size_t n_ = 0;
    double prev_ = 0.0, cur_ = 1.0, g_prev_ = 1.0;
};

// |K^k[f](t)|^2 for k = 0..N
std::vector<double> energies(const FamilySpec& family, const FunctionSpec& f, double t,
                             std::size_t N) {
    std::vector<double> out(N + 1);
    using Kind = FunctionSpec::Kind;
    if (f.kind() == Kind::exponential || f.kind() == Kind::constant) {
        const double w = f.kind() == Kind::exponential ? f.omega() : 0.0;
        const double scale = f.kind() == Kind::constant ? std::norm(f.constant_value()) : 1.0;
        PolyStream p(family, w);
        for (std::size_t k = 0; k <= N; ++k) {
            out[k] = scale * p.value() * p.value();
            if (k < N) p.advance();
        }
        return out;
    }
    if (f.kind() == Kind::cosine) {
        const double w = f.omega();
        const cplx e = std::polar(1.0, w * t);
        PolyStream p(family, w), q(family, -w);
        for (std::size_t k = 0; k <= N; ++k) {
            out[k] = std::norm(0.5 * (p.value() * e + q.value() * std::conj(e)));
            if (k < N) {
                p.advance();
                q.advance();
            }
        }
        return out;
    }
    const auto jet = f.chromatic_jet(family, t, N);
    for (std::size_t k = 0; k <= N; ++k) out[k] = std::norm(jet.values[k]);
    return out;
}

void summarise(SequenceDiagnostics& d) {
    const std::size_t N = d.values.size() - 1;
    const std::size_t start = N / 2;
    double sum = 0.0, lo = d.values[start], hi = d.values[start];
    for (std::size_t n = start; n <= N; ++n) {
        sum += d.values[n];
        lo = std::min(lo, d.values[n]);
        hi = std::max(hi, d.values[n]);
    }
    d.averaged_tail = sum / static_cast<double>(N - start + 1);
    d.oscillation = hi - lo;
    d.last = d.values[N];
}

double block_sum(const std::vector<double>& a, std::size_t from, std::size_t to) {
    double s = 0.0;
    for (std::size_t n = from; n < to; ++n) s += a[n];
    return s;
}

}  // namespace

bool ConditionReport::all_hold() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionFlag& c) { return c.holds(); });
}

std::vector<double> inverse_gamma_sums(const FamilySpec& family, std::size_t N) {
    std::vector<double> out(N + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k <= N; ++k) {
        acc += 1.0 / family.gamma(k);
        out[k] = acc;
    }
    return out;
}

ConditionReport check_conditions(const FamilySpec& family, std::size_t horizon, double kappa) {
    if (horizon < 100) throw ArgumentError("condition checks need horizon >= 100");
    if (!(kappa > 1.0)) throw ArgumentError("kappa must exceed 1");
    const std::size_t H = horizon;
    std::vector<double> g(H + 3);
    for (std::size_t n = 0; n < g.size(); ++n) g[n] = family.gamma(n);
    std::vector<double> d1(H + 2), d2(H + 1);
    for (std::size_t n = 0; n < d1.size(); ++n) d1[n] = g[n + 1] - g[n];
    for (std::size_t n = 0; n < d2.size(); ++n) d2[n] = d1[n + 1] - d1[n];

    ConditionReport rep;
    rep.family = family.id();
    rep.horizon = H;
    rep.kappa = kappa;

    auto series = [H](ConditionFlag& c, const std::function<double(std::size_t)>& term,
                      bool want_divergent) {
        std::vector<double> a(H);
        for (std::size_t n = 0; n < H; ++n) a[n] = term(n);
        const double early = block_sum(a, H / 4, H / 2);
        const double late = block_sum(a, H / 2, H);
        c.evidence = block_sum(a, 0, H);
        c.block_ratio = early > 0.0 ? late / early : 0.0;
        const bool converges = late <= 0.95 * early;
        c.numeric = want_divergent ? !converges : converges;
    };

    auto& c1 = rep.conditions[0];
    c1.name = "C1";
    c1.statement = "gamma_n -> inf (evidence gamma_H, ratio gamma_H/gamma_{H/10})";
    c1.evidence = g[H];
    c1.block_ratio = g[H] / g[H / 10];
    c1.numeric = c1.block_ratio >= 1.5;

    auto& c2 = rep.conditions[1];
    c2.name = "C2";
    c2.statement = "Delta gamma_n -> 0 (evidence max |Delta gamma| over [H/2,H))";
    double tail = 0.0, head = 0.0;
    for (std::size_t n = H / 2; n < H; ++n) tail = std::max(tail, std::abs(d1[n]));
    for (std::size_t n = H / 100; n <= H / 50; ++n) head = std::max(head, std::abs(d1[n]));
    c2.evidence = tail;
    c2.block_ratio = head > 0.0 ? tail / head : 0.0;
    c2.numeric = tail <= 0.5 * head || tail < 1e-12;

    auto& c3 = rep.conditions[2];
    c3.name = "C3";
    c3.statement = "gamma eventually increasing (evidence: violations of gamma_{n+1} > gamma_n on [H/10,H))";
    std::size_t violations = 0;
    for (std::size_t n = H / 10; n < H; ++n)
        if (!(g[n + 1] > g[n])) ++violations;
    c3.evidence = static_cast<double>(violations);
    c3.numeric = violations == 0;

    auto& c4 = rep.conditions[3];
    c4.name = "C4";
    c4.statement = "sum 1/gamma_n diverges (evidence partial sum to H)";
    series(c4, [&](std::size_t n) { return 1.0 / g[n]; }, true);

    auto& c5 = rep.conditions[4];
    c5.name = "C5";
    c5.statement = "sum 1/gamma_n^kappa converges (evidence partial sum to H)";
    series(c5, [&](std::size_t n) { return std::pow(g[n], -kappa); }, false);

    auto& c6 = rep.conditions[5];
    c6.name = "C6";
    c6.statement = "sum |Delta gamma_n|/gamma_n^2 converges (evidence partial sum to H)";
    series(c6, [&](std::size_t n) { return std::abs(d1[n]) / (g[n] * g[n]); }, false);

    auto& c7 = rep.conditions[6];
    c7.name = "C7";
    c7.statement = "sum |Delta^2 gamma_n|/gamma_n converges (evidence partial sum to H)";
    series(c7, [&](std::size_t n) { return std::abs(d2[n]) / g[n]; }, false);

    switch (family.id().kind) {
        case FamilyKind::hermite:
            for (auto& c : rep.conditions) c.analytic = true;
            rep.note = "gamma_n = (n+1)^(1/2)/sqrt(2): all conditions hold";
            break;
        case FamilyKind::laguerre:
        case FamilyKind::herron: {
            // gamma_n = n + 1
            const std::array<bool, 7> known{true, false, true, true, true, true, true};
            for (std::size_t i = 0; i < 7; ++i) rep.conditions[i].analytic = known[i];
            rep.note = "gamma_n = n+1 (p = 1): Delta gamma_n = 1, so C2 fails; C4 diverges only logarithmically";
            break;
        }
        default:
            rep.conditions[0].analytic = false;
            rep.note = "gamma_n bounded: C1 fails";
            break;
    }
    return rep;
}

SequenceDiagnostics nu_sequence(const FamilySpec& family, const FunctionSpec& f, double t,
                                std::size_t N) {
    const auto e = energies(family, f, t, N);
    const auto denom = inverse_gamma_sums(family, N);
    SequenceDiagnostics d;
    d.values.resize(N + 1);
    double acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        acc += e[n];
        d.values[n] = acc / denom[n];
    }
    summarise(d);
    return d;
}

SequenceDiagnostics beta_sequence(const FamilySpec& family, const FunctionSpec& f, double t,
                                  std::size_t N) {
    const auto e = energies(family, f, t, N + 1);
    SequenceDiagnostics d;
    d.values.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) d.values[n] = family.gamma(n) * (e[n] + e[n + 1]);
    summarise(d);
    return d;
}

SequenceDiagnostics sigma_sequence(const FamilySpec& family, double omega, double sigma, double t,
                                   std::size_t N) {
    if (omega == sigma) throw ArgumentError("sigma_sequence needs omega != sigma; use nu_sequence");
    const auto denom = inverse_gamma_sums(family, N);
    const cplx phase = std::polar(1.0, (omega - sigma) * t);
    PolyStream p(family, omega), q(family, sigma);
    SequenceDiagnostics d;
    d.values.resize(N + 1);
    d.complex_values.resize(N + 1);
    double acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        acc += p.value() * q.value();
        d.complex_values[n] = phase * (acc / denom[n]);
        d.values[n] = std::abs(d.complex_values[n]);
        if (n < N) {
            p.advance();
            q.advance();
        }
    }
    summarise(d);
    return d;
}

ChebyshevNorm chebyshev_exponential_norm(double x, std::size_t n) {
    if (!(std::abs(x) < 1.0)) throw DomainError("chebyshev_exponential_norm needs |x| < 1");
    const double m = static_cast<double>(n);
    const double formula = (2 * m + 1) / (2 * m + 2) +
                           std::sin((2 * m + 1) * std::acos(x)) / ((2 * m + 2) * std::sqrt(1 - x * x));
    const FamilySpec cheb(FamilyId::chebyshev_t());
    PolyStream p(cheb, std::numbers::pi * x);
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        acc += p.value() * p.value();
        if (k < n) p.advance();
    }
    return {formula, acc / (m + 1)};
}

double hermite_exponential_norm(double omega, std::size_t N, bool averaging) {
    const auto d = nu_sequence(FamilySpec(FamilyId::hermite()), FunctionSpec::exponential(omega), 0.0, N);
    return std::sqrt(averaging ? d.averaged_tail : d.last);
}

double hermite_norm_closed_form(double omega) {
    return std::exp(omega * omega / 2) / std::pow(4 * std::numbers::pi, 0.25);
}

}  // namespace chromatic
