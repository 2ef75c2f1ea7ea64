// Recursion coefficients as templates so the same formulas serve double and
// the extended-precision tables. Parameters are assumed validated.
#pragma once

#include <cstddef>

#include <boost/math/constants/constants.hpp>

#include "chromatic/families.hpp"

namespace chromatic::detail {

template <class Real>
Real gamma_coefficient(const FamilyId& id, std::size_t index) {
    using std::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    const Real n = static_cast<Real>(index);
    switch (id.kind) {
        case FamilyKind::legendre: {
            const Real m = n + 1;
            return pi * m / sqrt(4 * m * m - 1);
        }
        case FamilyKind::chebyshev_t:
            return index == 0 ? pi / sqrt(Real(2)) : pi / 2;
        case FamilyKind::chebyshev_u:
            return pi / 2;
        case FamilyKind::gegenbauer: {
            const Real a = id.a;
            return pi / 2 * sqrt((n + 1) * (n + 2 * a) / ((n + a) * (n + a + 1)));
        }
        case FamilyKind::jacobi: {
            const Real a = id.a;
            const Real b = id.b;
            const Real s = 2 * n + a + b;
            if (index == 0) {
                // The general form is 0/0 at a+b = -1; cancel (a+b+1) first.
                const Real q = 2 * pi / (a + b + 2);
                return sqrt(q * q * (a + 1) * (b + 1) / (a + b + 3));
            }
            return 2 * pi / (s + 2) *
                   sqrt((n + 1) * (n + a + 1) * (n + b + 1) * (n + a + b + 1) /
                        ((s + 1) * (s + 3)));
        }
        case FamilyKind::hermite:
            return sqrt((n + 1) / 2);
        case FamilyKind::laguerre:
        case FamilyKind::herron:
            return n + 1;
    }
    return Real(0);
}

template <class Real>
Real beta_coefficient(const FamilyId& id, std::size_t index) {
    const Real pi = boost::math::constants::pi<Real>();
    const Real n = static_cast<Real>(index);
    switch (id.kind) {
        case FamilyKind::jacobi: {
            const Real a = id.a;
            const Real b = id.b;
            if (index == 0) return pi * (a - b) / (a + b + 2);  // a+b = 0 safe
            const Real s = 2 * n + a + b;
            return pi * (a * a - b * b) / ((s + 2) * s);
        }
        case FamilyKind::laguerre:
            return -(2 * n + 1);
        default:
            return Real(0);
    }
}

}  // namespace chromatic::detail
