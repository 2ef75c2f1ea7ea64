#include "chromatic/expansions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "chromatic/bessel.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/orthopoly.hpp"

namespace chromatic {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx sinc_value(cplx z) {
    if (std::abs(z) < 1e-8) return 1.0 - kPi * kPi * z * z / 6.0;
    return std::sin(kPi * z) / (kPi * z);
}

std::size_t sinc_rule_size(std::size_t degree, const std::vector<cplx>& centers) {
    double reach = 0.0;
    for (const auto& c : centers) reach = std::max(reach, std::abs(c));
    return degree / 2 + 32 + static_cast<std::size_t>(std::ceil(2.0 * kPi * reach));
}

// Taylor coefficients of sinc at each centre: (1/k!) int (i w)^k e^{i w u} dw/2pi
std::vector<std::vector<cplx>> sinc_taylor_jets(const std::vector<cplx>& centers, std::size_t K) {
    const FamilySpec legendre(FamilyId::legendre());
    const auto rule = gauss_quadrature(legendre, sinc_rule_size(K, centers));
    std::vector<std::vector<cplx>> out(centers.size(), std::vector<cplx>(K + 1, 0.0));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = rule.nodes[i];
        for (std::size_t c = 0; c < centers.size(); ++c) {
            cplx term = rule.weights[i] * std::exp(kI * w * centers[c]);
            for (std::size_t k = 0; k <= K; ++k) {
                out[c][k] += term;
                term *= kI * w / static_cast<double>(k + 1);
            }
        }
    }
    return out;
}

// Re-expand sum a_k (z - c)^k about u (classic Taylor shift).
std::vector<cplx> shift_polynomial(const TaylorJet& jet, cplx u) {
    const cplx h = u - jet.center;
    std::vector<cplx> a(jet.coefficients);
    const std::size_t d = a.size() - 1;
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t k = d; k-- > m;) a[k] += h * a[k + 1];
    return a;
}

}  // namespace

FunctionSpec FunctionSpec::exponential(double omega) {
    FunctionSpec f;
    f.kind_ = Kind::exponential;
    f.omega_ = omega;
    return f;
}

FunctionSpec FunctionSpec::taylor(TaylorJet jet) {
    if (jet.coefficients.empty()) throw ArgumentError("empty Taylor jet");
    FunctionSpec f;
    f.kind_ = Kind::taylor_jet;
    f.jet_ = std::move(jet);
    return f;
}

FunctionSpec FunctionSpec::sinc() {
    FunctionSpec f;
    f.kind_ = Kind::sinc;
    return f;
}

FunctionSpec FunctionSpec::cosine(double omega) {
    FunctionSpec f;
    f.kind_ = Kind::cosine;
    f.omega_ = omega;
    return f;
}

FunctionSpec FunctionSpec::constant(cplx c) {
    FunctionSpec f;
    f.kind_ = Kind::constant;
    f.constant_ = c;
    return f;
}

FunctionSpec FunctionSpec::shannon_combo(std::vector<double> samples, long first_index) {
    FunctionSpec f;
    f.kind_ = Kind::shannon_combo;
    f.samples_ = std::move(samples);
    f.first_index_ = first_index;
    return f;
}

std::string FunctionSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case Kind::exponential: os << "exp(i*" << omega_ << "*t)"; break;
        case Kind::taylor_jet: os << "polynomial(degree " << jet_.coefficients.size() - 1 << ")"; break;
        case Kind::sinc: os << "sinc"; break;
        case Kind::cosine: os << "cos(" << omega_ << "*t)"; break;
        case Kind::constant: os << "constant(" << constant_.real() << "," << constant_.imag() << ")"; break;
        case Kind::shannon_combo:
            os << "shannon(" << samples_.size() << " samples from " << first_index_ << ")";
            break;
    }
    return os.str();
}

bool FunctionSpec::square_summable() const {
    switch (kind_) {
        case Kind::sinc:
        case Kind::shannon_combo:
            return true;
        case Kind::constant:
            return constant_ == cplx(0.0);
        default:
            return false;
    }
}

cplx FunctionSpec::value(cplx z) const {
    switch (kind_) {
        case Kind::exponential: return std::exp(kI * omega_ * z);
        case Kind::taylor_jet: {
            cplx acc = 0.0;
            const cplx h = z - jet_.center;
            for (std::size_t k = jet_.coefficients.size(); k-- > 0;)
                acc = acc * h + jet_.coefficients[k];
            return acc;
        }
        case Kind::sinc: return sinc_value(z);
        case Kind::cosine: return std::cos(omega_ * z);
        case Kind::constant: return constant_;
        case Kind::shannon_combo: {
            cplx acc = 0.0;
            for (std::size_t j = 0; j < samples_.size(); ++j)
                acc += samples_[j] * sinc_value(z - static_cast<double>(first_index_ + static_cast<long>(j)));
            return acc;
        }
    }
    return 0.0;
}

std::vector<std::vector<cplx>> sinc_chromatic_jets(const FamilySpec& family,
                                                   const std::vector<cplx>& centers,
                                                   std::size_t N) {
    std::vector<std::vector<cplx>> out(centers.size(), std::vector<cplx>(N + 1, 0.0));
    if (family.id().kind == FamilyKind::legendre) {
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const auto j = spherical_j_sequence(N, kPi * centers[c]);
            for (std::size_t n = 0; n <= N; ++n)
                out[c][n] = (n % 2 ? -1.0 : 1.0) * std::sqrt(2.0 * n + 1.0) * j[n];
        }
        return out;
    }
    // K^n[sinc](u) = int i^n p_n(w) e^{i w u} dw/2pi over [-pi, pi]
    const FamilySpec legendre(FamilyId::legendre());
    const auto rule = gauss_quadrature(legendre, sinc_rule_size(N, centers));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = rule.nodes[i];
        const auto p = eval_all_p(family, N, w);
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const cplx e = rule.weights[i] * std::exp(kI * w * centers[c]);
            for (std::size_t n = 0; n <= N; ++n) out[c][n] += e * p.values[n];
        }
    }
    for (auto& jet : out)
        for (std::size_t n = 0; n <= N; ++n) jet[n] *= i_pow(n);
    return out;
}

ChromaticJet FunctionSpec::chromatic_jet(const FamilySpec& family, cplx u, std::size_t N) const {
    ChromaticJet out{family.id(), u, std::vector<cplx>(N + 1, 0.0)};
    switch (kind_) {
        case Kind::exponential:
        case Kind::cosine: {
            const auto p = eval_all_p(family, N, omega_);
            const auto q = eval_all_p(family, N, -omega_);
            const cplx e = std::exp(kI * omega_ * u);
            const cplx e_neg = std::exp(-kI * omega_ * u);
            for (std::size_t n = 0; n <= N; ++n) {
                const cplx plus = i_pow(n) * p.values[n] * e;
                out.values[n] = kind_ == Kind::exponential
                                    ? plus
                                    : 0.5 * (plus + i_pow(n) * q.values[n] * e_neg);
            }
            break;
        }
        case Kind::constant: {
            const auto p = eval_all_p(family, N, 0.0);
            for (std::size_t n = 0; n <= N; ++n) out.values[n] = constant_ * i_pow(n) * p.values[n];
            break;
        }
        case Kind::sinc:
            out.values = sinc_chromatic_jets(family, {u}, N)[0];
            break;
        case Kind::shannon_combo: {
            std::vector<cplx> centers(samples_.size());
            for (std::size_t j = 0; j < samples_.size(); ++j)
                centers[j] = u - static_cast<double>(first_index_ + static_cast<long>(j));
            const auto jets = sinc_chromatic_jets(family, centers, N);
            for (std::size_t j = 0; j < samples_.size(); ++j)
                for (std::size_t n = 0; n <= N; ++n) out.values[n] += samples_[j] * jets[j][n];
            break;
        }
        case Kind::taylor_jet: {
            TaylorJet local{u, shift_polynomial(jet_, u)};
            local.coefficients.resize(std::max(local.coefficients.size(), N + 1), 0.0);
            out = shared_calculus(family, N, N)->to_chromatic(local, N);
            break;
        }
    }
    return out;
}

TaylorJet FunctionSpec::taylor_jet(cplx u, std::size_t K) const {
    TaylorJet out{u, std::vector<cplx>(K + 1, 0.0)};
    switch (kind_) {
        case Kind::exponential:
        case Kind::cosine: {
            cplx plus = std::exp(kI * omega_ * u);
            cplx minus = std::exp(-kI * omega_ * u);
            for (std::size_t k = 0; k <= K; ++k) {
                out.coefficients[k] = kind_ == Kind::exponential ? plus : 0.5 * (plus + minus);
                plus *= kI * omega_ / static_cast<double>(k + 1);
                minus *= -kI * omega_ / static_cast<double>(k + 1);
            }
            break;
        }
        case Kind::constant:
            out.coefficients[0] = constant_;
            break;
        case Kind::sinc:
            out.coefficients = sinc_taylor_jets({u}, K)[0];
            break;
        case Kind::shannon_combo: {
            std::vector<cplx> centers(samples_.size());
            for (std::size_t j = 0; j < samples_.size(); ++j)
                centers[j] = u - static_cast<double>(first_index_ + static_cast<long>(j));
            const auto jets = sinc_taylor_jets(centers, K);
            for (std::size_t j = 0; j < samples_.size(); ++j)
                for (std::size_t k = 0; k <= K; ++k) out.coefficients[k] += samples_[j] * jets[j][k];
            break;
        }
        case Kind::taylor_jet: {
            auto shifted = shift_polynomial(jet_, u);
            for (std::size_t k = 0; k <= K && k < shifted.size(); ++k) out.coefficients[k] = shifted[k];
            break;
        }
    }
    return out;
}

ApproximationResult chromatic_approximation(const FamilySpec& family, const FunctionSpec& f,
                                            cplx u, std::size_t N, cplx z) {
    const auto jet = f.chromatic_jet(family, u, N);
    const BasisEvaluator basis(family, N);
    const auto k = basis.all(N, z - u);
    ApproximationResult out{0.0, N, std::nullopt};
    double energy = 0.0;
    for (std::size_t n = 0; n <= N; ++n) {
        out.value += (n % 2 ? -1.0 : 1.0) * jet.values[n] * k[n];
        energy += std::norm(k[n]);
    }
    if (u.imag() == 0.0 && z.imag() == 0.0 && f.square_summable()) {
        const auto longer = f.chromatic_jet(family, u, 2 * N + 16);
        double tail = 0.0;
        for (std::size_t n = N + 1; n < longer.values.size(); ++n) tail += std::norm(longer.values[n]);
        out.tail_bound = std::sqrt(tail) * std::sqrt(std::max(0.0, 1.0 - energy));
    }
    return out;
}

double error_envelope(const FamilySpec& family, std::size_t N, double t) {
    const auto k = BasisEvaluator(family, N).all(N, t);
    double energy = 0.0;
    for (const auto& v : k) energy += std::norm(v);
    return std::sqrt(std::max(0.0, 1.0 - energy));
}

double local_norm_sq(const FamilySpec& family, const FunctionSpec& f, double t, std::size_t N) {
    double acc = 0.0;
    for (const auto& v : f.chromatic_jet(family, t, N).values) acc += std::norm(v);
    return acc;
}

cplx local_scalar(const FamilySpec& family, const FunctionSpec& f, const FunctionSpec& g, double t,
                  std::size_t N) {
    const auto a = f.chromatic_jet(family, t, N).values;
    const auto b = g.chromatic_jet(family, t, N).values;
    cplx acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) acc += a[n] * std::conj(b[n]);
    return acc;
}

cplx local_convolution(const FamilySpec& family, const FunctionSpec& f, const FunctionSpec& g,
                       double u, double t, std::size_t N) {
    const auto a = f.chromatic_jet(family, u, N).values;
    const auto b = g.chromatic_jet(family, t - u, N).values;
    cplx acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) acc += (n % 2 ? -1.0 : 1.0) * a[n] * b[n];
    return acc;
}

double identity_exponential(const FamilySpec& family, double omega, cplx z, std::size_t N) {
    const auto p = eval_all_p(family, N, omega);
    const auto k = BasisEvaluator(family, N).all(N, z);
    cplx acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) acc += i_pow(3 * n) * p.values[n] * k[n];
    return std::abs(std::exp(kI * omega * z) - acc);
}

double identity_translation(const FamilySpec& family, cplx u, cplx z, std::size_t N) {
    const BasisEvaluator basis(family, N);
    const auto ku = basis.all(N, u);
    const auto kz = basis.all(N, z);
    cplx acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) acc += (n % 2 ? -1.0 : 1.0) * ku[n] * kz[n];
    const cplx lhs = has_closed_form(family) ? kbasis_closed(family, 0, z + u) : basis(0, z + u);
    return std::abs(lhs - acc);
}

double identity_constant_one(const FamilySpec& family, cplx z, std::size_t N) {
    TaylorJet one{0.0, std::vector<cplx>(N + 1, 0.0)};
    one.coefficients[0] = 1.0;
    const auto c = shared_calculus(family, N, N)->to_chromatic(one, N).values;
    const auto k = BasisEvaluator(family, N).all(N, z);
    cplx acc = 0.0;
    for (std::size_t n = 0; n <= N; ++n) acc += (n % 2 ? -1.0 : 1.0) * c[n] * k[n];
    return std::abs(1.0 - acc);
}

std::vector<ComparisonRow> taylor_vs_chromatic_comparison(const FamilySpec& family,
                                                          const FunctionSpec& f, double u,
                                                          std::size_t N,
                                                          const std::vector<double>& grid) {
    const auto cjet = f.chromatic_jet(family, u, N);
    const auto tjet = f.taylor_jet(u, N);
    const BasisEvaluator basis(family, N);
    std::vector<ComparisonRow> rows;
    rows.reserve(grid.size());
    for (double t : grid) {
        const auto k = basis.all(N, t - u);
        cplx ca = 0.0, taylor = 0.0;
        for (std::size_t n = 0; n <= N; ++n) ca += (n % 2 ? -1.0 : 1.0) * cjet.values[n] * k[n];
        for (std::size_t n = N + 1; n-- > 0;) taylor = taylor * (t - u) + tjet.coefficients[n];
        rows.push_back({t, f.value(t), ca, taylor});
    }
    return rows;
}

}  // namespace chromatic
