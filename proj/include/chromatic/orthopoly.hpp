/**
 * @file orthopoly.hpp
 * Orthonormal polynomials by forward recurrence, and Christoffel-Darboux sums.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chromatic/families.hpp"

namespace chromatic {

struct PolyEvaluation {
    FamilyId family;
    std::size_t degree = 0;
    double omega = 0.0;
    std::vector<double> values;  // p_0(omega) .. p_N(omega)
    std::optional<std::vector<double>> derivative_values;
};

PolyEvaluation eval_all_p(const FamilySpec& family, std::size_t N, double omega,
                          bool with_derivatives = false);

/// p_N(omega) alone, without storing the sequence.
double eval_p(const FamilySpec& family, std::size_t N, double omega);

/// sum_{k<=N} p_k(omega) p_k(sigma) via the Christoffel-Darboux quotient.
/// ArgumentError when omega == sigma (use cd_diagonal).
double cd_kernel(const FamilySpec& family, std::size_t N, double omega, double sigma);

/// sum_{k<=N} p_k(omega)^2 = gamma_N (p'_{N+1} p_N - p_{N+1} p'_N).
double cd_diagonal(const FamilySpec& family, std::size_t N, double omega);

}  // namespace chromatic
