#include "chromatic/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "detail/recurrence.hpp"
#include "chromatic/errors.hpp"

namespace chromatic {
namespace {

struct KindName {
    FamilyKind kind;
    std::string_view name;
    int parameters;
};

constexpr std::array<KindName, 8> kKinds{{
    {FamilyKind::legendre, "legendre", 0},
    {FamilyKind::chebyshev_t, "chebyshev_t", 0},
    {FamilyKind::chebyshev_u, "chebyshev_u", 0},
    {FamilyKind::gegenbauer, "gegenbauer", 1},
    {FamilyKind::jacobi, "jacobi", 2},
    {FamilyKind::hermite, "hermite", 0},
    {FamilyKind::laguerre, "laguerre", 0},
    {FamilyKind::herron, "herron", 0},
}};

const KindName& lookup(FamilyKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw ArgumentError("unknown family kind");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ArgumentError("malformed family parameter in '" + std::string(whole) + "'");
    return value;
}

std::string format_number(double x) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

void validate(const FamilyId& id) {
    if (id.kind == FamilyKind::gegenbauer) {
        if (!(id.a > -0.5) || id.a == 0.0 || !std::isfinite(id.a))
            throw ParameterDomainError("gegenbauer requires a > -1/2 and a != 0, got " +
                                       format_number(id.a));
    }
    if (id.kind == FamilyKind::jacobi) {
        if (!(id.a > -1.0) || !(id.b > -1.0) || !std::isfinite(id.a) || !std::isfinite(id.b))
            throw ParameterDomainError("jacobi requires a > -1 and b > -1, got (" +
                                       format_number(id.a) + "," + format_number(id.b) + ")");
    }
}

// Euler numbers E_0, E_2, ..., E_{2n}: sum_k C(2n,2k) E_{2k} = 0 for n >= 1.
double euler_number(std::size_t half) {
    std::vector<double> e{1.0};
    for (std::size_t n = 1; n <= half; ++n) {
        // binomial C(2n, 2k) built incrementally
        double c = 1.0;
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            s += c * e[k];
            const double j = 2.0 * k;
            c *= (2.0 * n - j) * (2.0 * n - j - 1) / ((j + 1) * (j + 2));
        }
        e.push_back(-s);
    }
    return e[half];
}

}  // namespace

FamilyId FamilyId::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto open = s.find('(');
    const std::string_view head = trim(s.substr(0, open));
    const KindName* found = nullptr;
    for (const auto& k : kKinds)
        if (k.name == head) found = &k;
    if (!found) throw ArgumentError("unknown family '" + std::string(text) + "'");

    std::vector<double> params;
    if (open != std::string_view::npos) {
        if (s.back() != ')') throw ArgumentError("missing ')' in '" + std::string(text) + "'");
        std::string_view body = s.substr(open + 1, s.size() - open - 2);
        while (true) {
            const auto comma = body.find(',');
            params.push_back(parse_number(body.substr(0, comma), text));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
    }
    if (static_cast<int>(params.size()) != found->parameters)
        throw ArgumentError("family '" + std::string(head) + "' takes " +
                            std::to_string(found->parameters) + " parameter(s)");
    FamilyId id{found->kind};
    if (params.size() > 0) id.a = params[0];
    if (params.size() > 1) id.b = params[1];
    return id;
}

std::string FamilyId::to_string() const {
    const auto& k = lookup(kind);
    std::string out(k.name);
    if (k.parameters == 1) out += "(" + format_number(a) + ")";
    if (k.parameters == 2) out += "(" + format_number(a) + "," + format_number(b) + ")";
    return out;
}

FamilySpec::FamilySpec(FamilyId id) : id_(id) {
    validate(id_);
    switch (id_.kind) {
        case FamilyKind::jacobi:
            symmetric_ = id_.a == id_.b;
            break;
        case FamilyKind::laguerre:
            symmetric_ = false;
            break;
        default:
            symmetric_ = true;
    }
    switch (id_.kind) {
        case FamilyKind::hermite:
            growth_exponent_ = 0.5;
            support_ = Support::real_line;
            break;
        case FamilyKind::laguerre:
            growth_exponent_ = 1.0;
            support_ = Support::half_line;
            rho_ = 1.0;  // m(z) = 1/(1 - iz)
            break;
        case FamilyKind::herron:
            growth_exponent_ = 1.0;
            support_ = Support::real_line;
            rho_ = 2.0 / std::numbers::pi;  // sech z, poles at +-i pi/2
            break;
        default:
            break;
    }
    if (growth_exponent_ < 1.0) {
        double m = 1.0;
        for (std::size_t n = 0; n <= 1000; ++n) {
            const double g = gamma(n);
            const double scale = std::pow(static_cast<double>(n + 1), growth_exponent_);
            m = std::max({m, g / scale, scale / g, std::abs(beta(n)) / g});
        }
        weak_bound_M_ = std::ceil(m);
    }
}

std::string FamilySpec::support_description() const {
    switch (support_) {
        case Support::compact:
            return "[-pi,pi]";
        case Support::real_line:
            return "real line";
        case Support::half_line:
            return "half line [0,inf)";
    }
    return {};
}

double FamilySpec::gamma(std::size_t n) const { return detail::gamma_coefficient<double>(id_, n); }

double FamilySpec::beta(std::size_t n) const { return detail::beta_coefficient<double>(id_, n); }

std::vector<FamilyId> representative_families() {
    return {FamilyId::legendre(),       FamilyId::chebyshev_t(),        FamilyId::chebyshev_u(),
            FamilyId::gegenbauer(1.0),  FamilyId::jacobi(0.5, -0.25),   FamilyId::hermite(),
            FamilyId::laguerre(),       FamilyId::herron()};
}

RecursionPair recursion_coefficients(const FamilySpec& family, std::size_t n) {
    return {family.gamma(n), family.beta(n)};
}

bool has_analytic_moments(const FamilySpec& family) {
    const auto k = family.id().kind;
    return k != FamilyKind::gegenbauer && k != FamilyKind::jacobi;
}

double moment_analytic(const FamilySpec& family, std::size_t k) {
    if (!has_analytic_moments(family))
        throw UnsupportedError("no closed-form moments for " + family.name() +
                               "; use moment_jacobi_matrix");
    constexpr double pi = std::numbers::pi;
    const auto kind = family.id().kind;
    if (kind == FamilyKind::laguerre) return std::tgamma(static_cast<double>(k) + 1.0);
    if (k % 2 == 1) return 0.0;
    const std::size_t n = k / 2;
    switch (kind) {
        case FamilyKind::legendre:
            return std::pow(pi, 2.0 * n) / (2.0 * n + 1.0);
        case FamilyKind::chebyshev_t:
        case FamilyKind::chebyshev_u: {
            // pi^{2n} Gamma(n+1/2) / (sqrt(pi) n!) as a product of ratios
            double v = 1.0;
            for (std::size_t j = 1; j <= n; ++j) v *= pi * pi * (2.0 * j - 1.0) / (2.0 * j);
            // The U weight carries an extra 1/(n+1); the factor 2 sometimes
            // printed in front would make mu_0 = 1/2.
            return kind == FamilyKind::chebyshev_u ? v / (n + 1.0) : v;
        }
        case FamilyKind::hermite: {
            double v = 1.0;
            for (std::size_t j = 0; j < n; ++j) v *= j + 0.5;
            return v;
        }
        case FamilyKind::herron:
            return std::abs(euler_number(n));
        default:
            break;
    }
    throw UnsupportedError("no closed-form moments for " + family.name());
}

JacobiMatrix jacobi_matrix(const FamilySpec& family, std::size_t dimension) {
    if (dimension == 0) throw ArgumentError("Jacobi matrix dimension must be positive");
    JacobiMatrix j;
    j.diagonal.resize(dimension);
    j.offdiagonal.resize(dimension - 1);
    for (std::size_t n = 0; n < dimension; ++n) {
        j.diagonal[n] = -family.beta(n);
        if (n + 1 < dimension) j.offdiagonal[n] = family.gamma(n);
    }
    return j;
}

double moment_jacobi_matrix(const FamilySpec& family, std::size_t k) {
    const std::size_t dim = k / 2 + 2;
    const JacobiMatrix j = jacobi_matrix(family, dim);
    // v_s = J^s e_0; mu_k = <v_floor(k/2), v_ceil(k/2)>
    std::vector<double> v(dim, 0.0), next(dim);
    v[0] = 1.0;
    std::vector<double> half;
    for (std::size_t s = 0;; ++s) {
        if (s == k / 2) half = v;
        if (s == k - k / 2) break;
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = j.diagonal[i] * v[i];
            if (i > 0) acc += j.offdiagonal[i - 1] * v[i - 1];
            if (i + 1 < dim) acc += j.offdiagonal[i] * v[i + 1];
            next[i] = acc;
        }
        v.swap(next);
    }
    double mu = 0.0;
    for (std::size_t i = 0; i < dim; ++i) mu += half[i] * v[i];
    return mu;
}

QuadratureRule gauss_quadrature(const FamilySpec& family, std::size_t n) {
    if (n == 0) throw ArgumentError("quadrature needs at least one node");
    const JacobiMatrix j = jacobi_matrix(family, n);
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(j.diagonal.data(), n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) sub[i] = j.offdiagonal[i];

    QuadratureRule rule;
    if (n == 1) {
        rule.nodes = {diag[0]};
        rule.weights = {1.0};
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("tridiagonal eigensolver failed for " + family.name());

    rule.nodes.resize(n);
    rule.weights.resize(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
        rule.nodes[i] = x;
        double prev = 0.0, cur = 1.0, sum = 1.0;
        for (std::size_t m = 0; m + 1 < n; ++m) {
            const double g_prev = m == 0 ? 1.0 : family.gamma(m - 1);
            const double nxt = ((x + family.beta(m)) * cur - g_prev * prev) / family.gamma(m);
            prev = cur;
            cur = nxt;
            sum += cur * cur;
        }
        rule.weights[i] = 1.0 / sum;
        total += rule.weights[i];
    }
    for (auto& w : rule.weights) w /= total;
    return rule;
}

}  // namespace chromatic
