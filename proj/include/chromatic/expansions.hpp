/**
 * @file expansions.hpp
 * Test functions with analytic chromatic jets, chromatic approximations,
 * the error envelope E_n, local norms and the series identities.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chromatic/basis_functions.hpp"
#include "chromatic/chromatic_core.hpp"
#include "chromatic/families.hpp"

namespace chromatic {

class FunctionSpec {
public:
    enum class Kind { exponential, taylor_jet, sinc, cosine, constant, shannon_combo };

    /// e^{i omega z}
    static FunctionSpec exponential(double omega);
    /// The polynomial sum_k c_k (z - center)^k.
    static FunctionSpec taylor(TaylorJet jet);
    /// sin(pi z) / (pi z)
    static FunctionSpec sinc();
    static FunctionSpec cosine(double omega);
    static FunctionSpec constant(cplx c);
    /// sum_j samples[j] sinc(z - first_index - j)
    static FunctionSpec shannon_combo(std::vector<double> samples, long first_index);

    Kind kind() const { return kind_; }
    double omega() const { return omega_; }
    cplx constant_value() const { return constant_; }
    std::string describe() const;

    cplx value(cplx z) const;
    /// K^0[f](u) .. K^N[f](u)
    ChromaticJet chromatic_jet(const FamilySpec& family, cplx u, std::size_t N) const;
    /// f^{(k)}(u) / k! for k <= K
    TaylorJet taylor_jet(cplx u, std::size_t K) const;

    /// Finite energy sum_n |K^n[f]|^2 (true for sinc, shannon combos, zero).
    bool square_summable() const;

private:
    Kind kind_ = Kind::constant;
    double omega_ = 0.0;
    cplx constant_{};
    TaylorJet jet_;
    std::vector<double> samples_;
    long first_index_ = 0;
};

/// K^n[sinc](u_j) for several centres sharing one Gauss rule; for legendre
/// the closed form (-1)^n sqrt(2n+1) j_n(pi u) is used instead.
std::vector<std::vector<cplx>> sinc_chromatic_jets(const FamilySpec& family,
                                                   const std::vector<cplx>& centers,
                                                   std::size_t N);

struct ApproximationResult {
    cplx value;
    std::size_t order = 0;
    /// sqrt(sum_{N<k<=2N+16} |K^k[f](u)|^2) * E_N(t-u): the truncation bound
    /// with the energy tail estimated from a longer jet. Only for real z, u
    /// and square-summable f.
    std::optional<double> tail_bound;
};

ApproximationResult chromatic_approximation(const FamilySpec& family, const FunctionSpec& f,
                                            cplx u, std::size_t N, cplx z);

double error_envelope(const FamilySpec& family, std::size_t N, double t);

double local_norm_sq(const FamilySpec& family, const FunctionSpec& f, double t, std::size_t N);
cplx local_scalar(const FamilySpec& family, const FunctionSpec& f, const FunctionSpec& g, double t,
                  std::size_t N);
cplx local_convolution(const FamilySpec& family, const FunctionSpec& f, const FunctionSpec& g,
                       double u, double t, std::size_t N);

/// |e^{i omega z} - sum_{n<=N} (-i)^n p_n(omega) K^n[m](z)|
double identity_exponential(const FamilySpec& family, double omega, cplx z, std::size_t N);
/// |m(z+u) - sum_{n<=N} (-1)^n K^n[m](u) K^n[m](z)|
double identity_translation(const FamilySpec& family, cplx u, cplx z, std::size_t N);
/// |1 - sum_{k<=N} (-1)^k K^k[1](0) K^k[m](z)|, K^k[1](0) from the constant jet.
double identity_constant_one(const FamilySpec& family, cplx z, std::size_t N);

struct ComparisonRow {
    double t;
    cplx exact;
    cplx chromatic;
    cplx taylor;
};

std::vector<ComparisonRow> taylor_vs_chromatic_comparison(const FamilySpec& family,
                                                          const FunctionSpec& f, double u,
                                                          std::size_t N,
                                                          const std::vector<double>& grid);

}  // namespace chromatic
