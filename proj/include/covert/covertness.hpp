#pragma once

// Willie-side detection math: the large-N equal-variance surrogate for the
// radiometer's total error, midpoint and exact likelihood-ratio thresholds,
// the exact gamma-CDF detection error at finite N, the Rayleigh-averaged
// benchmark, and the covertness-induced power ceiling.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "covert/specfun.hpp"

namespace covert::covertness {

// Means of the block-average statistic T under the two hypotheses,
// conditioned on the realized Willie fading power g_w.
struct DetectorMoments {
    double mu0;  // E[T | H0] = sigma_w2
    double mu1;  // E[T | H1, g_w] = sigma_w2 + P*g_w
};

struct Threshold {
    double lambda;  // detection threshold, linear power units
};

struct AveragedBenchmarkResult {
    double eta;     // 2*sigma_w2 / (sqrt(N)*P*omega_w)
    double xi_bar;  // averaged total detection error, in (0,1)
};

struct MinExactXi {
    Threshold threshold;
    double xi;
};

// Numeric failure in a bracketed search; carries diagnostics.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline DetectorMoments detector_moments(double power, double sigma_w2, double g_w) {
    if (!(power >= 0.0) || !(sigma_w2 > 0.0) || !(g_w > 0.0)) {
        throw std::domain_error("detector_moments: invalid inputs");
    }
    return {sigma_w2, sigma_w2 + power * g_w};
}

// Large-N equal-variance surrogate 2Q(sqrt(N) P g_w / (2 sigma_w2)) for the
// minimum total detection error. Equals 1 at P = 0, strictly decreasing in
// P and strictly increasing in sigma_w2.
inline double surrogate_xi(double power, double sigma_w2, double g_w, std::int64_t n_block) {
    if (!(power >= 0.0) || !(sigma_w2 > 0.0) || !(g_w > 0.0) || n_block < 1) {
        throw std::domain_error("surrogate_xi: invalid inputs");
    }
    const double arg = std::sqrt(static_cast<double>(n_block)) * power * g_w / (2.0 * sigma_w2);
    return 2.0 * specfun::q_func(arg);
}

// Optimal threshold for equal-variance Gaussian hypotheses.
inline Threshold midpoint_threshold(const DetectorMoments& m) {
    if (!(m.mu0 > 0.0) || !(m.mu1 >= m.mu0)) {
        throw std::domain_error("midpoint_threshold: invalid moments");
    }
    return {0.5 * (m.mu0 + m.mu1)};
}

// Exact minimizer of P_FA + P_MD for the finite-N gamma statistic:
// (mu0*mu1/(mu1-mu0)) ln(mu1/mu0). Lies strictly between mu0 and the
// midpoint, approaching the midpoint as mu1 -> mu0.
inline Threshold exact_lrt_threshold(const DetectorMoments& m) {
    const double gap = m.mu1 - m.mu0;
    if (!(m.mu0 > 0.0) || !(gap > 0.0)) {
        throw std::domain_error("exact_lrt_threshold: requires mu1 > mu0 > 0");
    }
    return {m.mu0 * m.mu1 / gap * std::log1p(gap / m.mu0)};
}

// Total detection error P_FA + P_MD at an arbitrary threshold. T is the
// mean of N exponentials, so N*T/mu is Gamma(N, 1) under each hypothesis.
inline double exact_xi_at(Threshold t, double power, double sigma_w2, double g_w,
                          std::int64_t n_block) {
    if (!(t.lambda > 0.0) || n_block < 1) {
        throw std::domain_error("exact_xi_at: invalid inputs");
    }
    const auto m = detector_moments(power, sigma_w2, g_w);
    const double n = static_cast<double>(n_block);
    const double p_fa = specfun::reg_gamma_upper(n, n * t.lambda / m.mu0);
    const double p_md = specfun::reg_gamma_lower(n, n * t.lambda / m.mu1);
    return p_fa + p_md;
}

// Bracketed golden-section minimization of exact_xi_at over the threshold.
// The analytic minimizer is exact_lrt_threshold; the search exists as an
// independent cross-check and must land on it.
inline MinExactXi min_exact_xi(double power, double sigma_w2, double g_w, std::int64_t n_block) {
    if (!(power > 0.0)) throw std::domain_error("min_exact_xi: requires power > 0");
    const double center = exact_lrt_threshold(detector_moments(power, sigma_w2, g_w)).lambda;
    double a = 0.5 * center;
    double b = 1.5 * center;
    const double xi_a = exact_xi_at({a}, power, sigma_w2, g_w, n_block);
    const double xi_b = exact_xi_at({b}, power, sigma_w2, g_w, n_block);
    const double xi_c = exact_xi_at({center}, power, sigma_w2, g_w, n_block);
    if (xi_c > xi_a || xi_c > xi_b) {
        throw NumericError("min_exact_xi: bracket [" + std::to_string(a) + ", " +
                           std::to_string(b) + "] does not enclose a minimum: xi = {" +
                           std::to_string(xi_a) + ", " + std::to_string(xi_c) + ", " +
                           std::to_string(xi_b) + "}");
    }

    constexpr double inv_phi = 0.61803398874989484820;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = exact_xi_at({x1}, power, sigma_w2, g_w, n_block);
    double f2 = exact_xi_at({x2}, power, sigma_w2, g_w, n_block);
    while (b - a > 1e-10 * center) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = exact_xi_at({x1}, power, sigma_w2, g_w, n_block);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = exact_xi_at({x2}, power, sigma_w2, g_w, n_block);
        }
    }
    const double lambda = 0.5 * (a + b);
    return {{lambda}, exact_xi_at({lambda}, power, sigma_w2, g_w, n_block)};
}

// Rayleigh-averaged benchmark: expectation of the surrogate over
// g_w ~ Exp(mean omega_w), in closed form 1 - 2 exp(eta^2/2) Q(eta).
inline AveragedBenchmarkResult averaged_xi(double power, double sigma_w2, double omega_w,
                                           std::int64_t n_block) {
    if (!(power > 0.0) || !(sigma_w2 > 0.0) || !(omega_w > 0.0) || n_block < 1) {
        throw std::domain_error("averaged_xi: invalid inputs");
    }
    const double eta = 2.0 * sigma_w2 / (std::sqrt(static_cast<double>(n_block)) * power * omega_w);
    return {eta, 1.0 - 2.0 * specfun::scaled_tail(eta)};
}

// Largest power satisfying surrogate_xi >= 1 - epsilon at the worst-case
// Willie noise level: (2 sigma_w2_lo / (sqrt(N) g_w)) Q^{-1}((1-eps)/2).
// epsilon == 1 returns +infinity so min() against a power budget composes.
inline double covert_power_ceiling(double sigma_w2_lo, double g_w, std::int64_t n_block,
                                   double epsilon) {
    if (!(sigma_w2_lo > 0.0) || !(g_w > 0.0) || n_block < 1 || !(epsilon > 0.0) ||
        !(epsilon <= 1.0)) {
        throw std::domain_error("covert_power_ceiling: invalid inputs");
    }
    if (epsilon == 1.0) return std::numeric_limits<double>::infinity();
    const double quantile = specfun::q_inv(0.5 * (1.0 - epsilon));
    return 2.0 * sigma_w2_lo / (std::sqrt(static_cast<double>(n_block)) * g_w) * quantile;
}

}  // namespace covert::covertness
