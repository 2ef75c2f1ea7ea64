/**
 * @file families.hpp
 * The eight moment functionals: recursion coefficients, moments and Gauss rules.
 *
 * Polynomials are normalised so that
 *   omega * p_n = gamma_n p_{n+1} - beta_n p_n + gamma_{n-1} p_{n-1},
 * with gamma_n > 0 and p_0 = 1.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chromatic {

enum class FamilyKind {
    legendre,
    chebyshev_t,
    chebyshev_u,
    gegenbauer,
    jacobi,
    hermite,
    laguerre,
    herron,
};

struct FamilyId {
    FamilyKind kind = FamilyKind::legendre;
    double a = 0.0;  // gegenbauer a, jacobi a
    double b = 0.0;  // jacobi b

    static FamilyId legendre() { return {FamilyKind::legendre}; }
    static FamilyId chebyshev_t() { return {FamilyKind::chebyshev_t}; }
    static FamilyId chebyshev_u() { return {FamilyKind::chebyshev_u}; }
    static FamilyId gegenbauer(double a) { return {FamilyKind::gegenbauer, a}; }
    static FamilyId jacobi(double a, double b) { return {FamilyKind::jacobi, a, b}; }
    static FamilyId hermite() { return {FamilyKind::hermite}; }
    static FamilyId laguerre() { return {FamilyKind::laguerre}; }
    static FamilyId herron() { return {FamilyKind::herron}; }

    /// Parses "legendre", "gegenbauer(1)", "jacobi(0.5,-0.25)", ...
    /// Throws ArgumentError on malformed input.
    static FamilyId parse(std::string_view text);

    /// Round-trips through parse(); parameters use the shortest exact decimal form.
    std::string to_string() const;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

enum class Support { compact, real_line, half_line };

struct RecursionPair {
    double gamma;
    double beta;
};

class FamilySpec {
public:
    /// Throws ParameterDomainError for gegenbauer(a <= -1/2 or a == 0)
    /// and jacobi(a <= -1 or b <= -1).
    explicit FamilySpec(FamilyId id);
    explicit FamilySpec(std::string_view text) : FamilySpec(FamilyId::parse(text)) {}

    const FamilyId& id() const { return id_; }
    std::string name() const { return id_.to_string(); }

    bool symmetric() const { return symmetric_; }
    /// p of the weak-boundedness definition; 1 for laguerre and herron.
    double growth_exponent() const { return growth_exponent_; }
    /// Smallest integer M with (n+1)^p/M <= gamma_n <= M (n+1)^p and
    /// |beta_n| <= M gamma_n up to n = 1000. Absent when p = 1.
    std::optional<double> weak_bound_M() const { return weak_bound_M_; }
    bool weakly_bounded() const { return weak_bound_M_.has_value(); }
    Support support() const { return support_; }
    std::string support_description() const;
    /// limsup (mu_n/n!)^(1/n); zero when m(z) is entire.
    double rho() const { return rho_; }

    double gamma(std::size_t n) const;
    double beta(std::size_t n) const;

private:
    FamilyId id_;
    bool symmetric_ = true;
    double growth_exponent_ = 0.0;
    std::optional<double> weak_bound_M_;
    Support support_ = Support::compact;
    double rho_ = 0.0;
};

/// One representative per family, in the canonical order.
std::vector<FamilyId> representative_families();

RecursionPair recursion_coefficients(const FamilySpec& family, std::size_t n);

/// Printed closed forms; UnsupportedError for gegenbauer and jacobi.
double moment_analytic(const FamilySpec& family, std::size_t k);
bool has_analytic_moments(const FamilySpec& family);

/// Diagonal entry n is -beta_n, off-diagonal entry n is gamma_n.
struct JacobiMatrix {
    std::vector<double> diagonal;
    std::vector<double> offdiagonal;  // size dimension-1

    std::size_t dimension() const { return diagonal.size(); }
};

JacobiMatrix jacobi_matrix(const FamilySpec& family, std::size_t dimension);

/// mu_k as the (0,0) entry of J^k, with J truncated to dimension k/2 + 1
/// (larger truncations do not change the entry).
double moment_jacobi_matrix(const FamilySpec& family, std::size_t k);

struct QuadratureRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // sum to 1
};

/// n-point Gauss rule for d alpha: nodes are the eigenvalues of the n x n
/// Jacobi matrix. Weights are Christoffel numbers 1 / sum_{k<n} p_k(x_i)^2,
/// renormalised to sum 1. Throws NumericError if the eigensolver fails.
QuadratureRule gauss_quadrature(const FamilySpec& family, std::size_t n);

}  // namespace chromatic
