#include "chromatic/fir_design.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "chromatic/bessel.hpp"
#include "chromatic/chromatic_core.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/orthopoly.hpp"

namespace chromatic {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

enum class Parity { even, odd, none };

// Rows of the design system for one frequency. For the half systems the
// unknowns are c_0..c_N (even) or c_1..c_N (odd); otherwise c_{-N}..c_N and
// each frequency contributes a real and an imaginary row.
struct System {
    Parity parity;
    std::size_t N;

    Eigen::Index unknowns() const {
        switch (parity) {
            case Parity::even: return static_cast<Eigen::Index>(N + 1);
            case Parity::odd: return static_cast<Eigen::Index>(N);
            default: return static_cast<Eigen::Index>(2 * N + 1);
        }
    }
    int rows_per_point() const { return parity == Parity::none ? 2 : 1; }

    void fill(double w, cplx target, Eigen::MatrixXd& A, Eigen::VectorXd& b, Eigen::Index row) const {
        const auto n = static_cast<long>(N);
        switch (parity) {
            case Parity::even:
                A(row, 0) = 1.0;
                for (long k = 1; k <= n; ++k) A(row, k) = 2.0 * std::cos(k * w);
                b[row] = target.real();
                break;
            case Parity::odd:  // H = 2i sum c_k sin(kw)
                for (long k = 1; k <= n; ++k) A(row, k - 1) = 2.0 * std::sin(k * w);
                b[row] = target.imag();
                break;
            case Parity::none:
                for (long k = -n; k <= n; ++k) {
                    A(row, k + n) = std::cos(k * w);
                    A(row + 1, k + n) = std::sin(k * w);
                }
                b[row] = target.real();
                b[row + 1] = target.imag();
                break;
        }
    }

    std::vector<double> taps(const Eigen::VectorXd& x) const {
        std::vector<double> c(2 * N + 1, 0.0);
        for (std::size_t k = 0; k <= N; ++k) {
            switch (parity) {
                case Parity::even:
                    c[N + k] = c[N - k] = x[static_cast<Eigen::Index>(k)];
                    break;
                case Parity::odd:
                    if (k > 0) {
                        c[N + k] = x[static_cast<Eigen::Index>(k - 1)];
                        c[N - k] = -c[N + k];
                    }
                    break;
                case Parity::none:
                    break;
            }
        }
        if (parity == Parity::none)
            for (std::size_t j = 0; j < 2 * N + 1; ++j) c[j] = x[static_cast<Eigen::Index>(j)];
        return c;
    }
};

void check_options(std::size_t n, std::size_t N, const FirDesignOptions& o) {
    if (N == 0) throw ArgumentError("half width must be positive");
    if (n > 2 * N) throw ArgumentError("operator order exceeds 2N");
    if (!(o.passband_edge > 0.0 && o.passband_edge < o.stopband_edge && o.stopband_edge <= kPi))
        throw ArgumentError("band edges must satisfy 0 < passband < stopband <= pi");
    if (o.grid_density == 0) throw ArgumentError("grid density must be positive");
    if (!(o.weight_ratio > 0.0)) throw ArgumentError("weight ratio must be positive");
}

FirDesign design_for_target(FamilyId family, std::size_t n, std::size_t N, Parity parity,
                            const std::function<cplx(double)>& target, const FirDesignOptions& o) {
    check_options(n, N, o);
    const System sys{parity, N};
    const bool full = parity == Parity::none;
    const double lo = full ? -kPi : 0.0;
    const std::size_t G = o.grid_density * (2 * N + 1);

    std::vector<double> grid;
    for (std::size_t i = 0; i < G; ++i) {
        const double w = lo + (kPi - lo) * static_cast<double>(i) / static_cast<double>(G - 1);
        if (std::abs(w) <= o.passband_edge || std::abs(w) >= o.stopband_edge) grid.push_back(w);
    }
    for (double edge : {o.passband_edge, o.stopband_edge}) {
        grid.push_back(edge);
        if (full) grid.push_back(-edge);
    }

    const auto rows = static_cast<Eigen::Index>(grid.size()) * sys.rows_per_point();
    Eigen::MatrixXd A(rows, sys.unknowns());
    Eigen::VectorXd b(rows), weight(rows);
    A.setZero();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        const bool pass = std::abs(w) <= o.passband_edge;
        const auto row = static_cast<Eigen::Index>(i) * sys.rows_per_point();
        sys.fill(w, pass ? target(w) : cplx(0.0), A, b, row);
        for (int r = 0; r < sys.rows_per_point(); ++r) weight[row + r] = pass ? 1.0 : o.weight_ratio;
    }

    // Lawson: v <- v * |weighted error|, normalised; v = 1 is plain LS.
    Eigen::VectorXd v = Eigen::VectorXd::Ones(rows);
    Eigen::VectorXd x;
    double condition = 0.0;
    for (std::size_t pass = 0; pass <= o.refine_iterations; ++pass) {
        const Eigen::VectorXd s = (v.array().sqrt() * weight.array()).matrix();
        const Eigen::MatrixXd As = s.asDiagonal() * A;
        const Eigen::VectorXd bs = (s.array() * b.array()).matrix();
        if (pass == 0) {
            Eigen::BDCSVD<Eigen::MatrixXd> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const auto& sv = svd.singularValues();
            condition = sv[0] / sv[sv.size() - 1];
            if (!std::isfinite(condition) || condition > 1e13)
                throw NumericError("FIR design system ill-conditioned (condition number " +
                                   std::to_string(condition) + ")");
            x = svd.solve(bs);
        } else {
            x = As.colPivHouseholderQr().solve(bs);
        }
        if (pass == o.refine_iterations) break;
        Eigen::ArrayXd e = ((A * x - b).array().abs() * weight.array());
        if (parity == Parity::none)  // one modulus per frequency
            for (Eigen::Index r = 0; r < rows; r += 2)
                e[r] = e[r + 1] = std::hypot(e[r], e[r + 1]);
        v = (v.array() * e).matrix();
        const double total = v.sum();
        if (!(total > 0.0)) break;
        v /= total;
    }

    FirDesign out;
    out.filter.family = family;
    out.filter.order = n;
    out.filter.half_width = N;
    out.filter.taps = sys.taps(x);
    out.filter.passband_edge = o.passband_edge;
    out.filter.stopband_edge = o.stopband_edge;

    // Errors on a grid 8x finer than the design grid, edges included.
    const std::size_t check = 8 * G;
    double pass_err = 0.0, stop_mag = 0.0;
    for (std::size_t i = 0; i <= check; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(check);
        const double wp = o.passband_edge * (full ? 2.0 * frac - 1.0 : frac);
        pass_err = std::max(pass_err, std::abs(transfer_function(out.filter, wp) - target(wp)));
        const double ws = o.stopband_edge + (kPi - o.stopband_edge) * frac;
        stop_mag = std::max(stop_mag, std::abs(transfer_function(out.filter, ws)));
        if (full) stop_mag = std::max(stop_mag, std::abs(transfer_function(out.filter, -ws)));
    }
    out.report.passband_max_error = pass_err;
    out.report.stopband_max_magnitude = stop_mag;
    out.report.grid_size = grid.size();
    out.report.condition_number = condition;
    out.report.refine_iterations = o.refine_iterations;
    return out;
}

Parity parity_of(const FamilySpec& family, std::size_t n) {
    if (!family.symmetric()) return Parity::none;
    return n % 2 ? Parity::odd : Parity::even;
}

}  // namespace

FirDesign design_ls(const FamilySpec& family, std::size_t n, std::size_t N,
                    const FirDesignOptions& options) {
    if (family.support() != Support::compact)
        throw DomainError("FIR design needs a family supported in [-pi, pi]; got " + family.name());
    auto target = [&family, n](double w) { return i_pow(n) * eval_p(family, n, w); };
    return design_for_target(family.id(), n, N, parity_of(family, n), target, options);
}

FirDesign design_derivative_ls(std::size_t n, std::size_t N, const FirDesignOptions& options) {
    auto target = [n](double w) { return i_pow(n) * std::pow(w / kPi, static_cast<double>(n)); };
    // The family tag is informational only for the contrast filter.
    return design_for_target(FamilyId::legendre(), n, N, n % 2 ? Parity::odd : Parity::even,
                             target, options);
}

cplx transfer_function(const FirFilter& filter, double omega) {
    // pair k with -k so symmetric and antisymmetric taps cancel exactly at omega = 0
    cplx acc = filter.tap(0);
    const auto N = static_cast<long>(filter.half_width);
    for (long k = 1; k <= N; ++k)
        acc += filter.tap(k) * std::polar(1.0, omega * k) + filter.tap(-k) * std::polar(1.0, -omega * k);
    return acc;
}

cplx apply(const FirFilter& filter, const std::vector<cplx>& samples, long t) {
    const auto N = static_cast<long>(filter.half_width);
    if (t - N < 0 || t + N >= static_cast<long>(samples.size()))
        throw ArgumentError("filter window [t-N, t+N] leaves the sample range");
    cplx acc = 0.0;
    for (long k = -N; k <= N; ++k) acc += filter.tap(k) * samples[static_cast<std::size_t>(t + k)];
    return acc;
}

cplx apply(const FirFilter& filter, const std::vector<double>& samples, long t) {
    const auto N = static_cast<long>(filter.half_width);
    if (t - N < 0 || t + N >= static_cast<long>(samples.size()))
        throw ArgumentError("filter window [t-N, t+N] leaves the sample range");
    double acc = 0.0;
    for (long k = -N; k <= N; ++k) acc += filter.tap(k) * samples[static_cast<std::size_t>(t + k)];
    return acc;
}

std::vector<DecayRow> shannon_decay_report(std::size_t n, double t, long range) {
    std::vector<DecayRow> rows;
    const double scale = std::sqrt(2.0 * n + 1.0);
    for (long m = -range; m <= range; ++m)
        rows.push_back({m, scale * std::abs(spherical_j(n, kPi * (t - static_cast<double>(m))))});
    return rows;
}

}  // namespace chromatic
