#pragma once

// Bob-side outage model under Rayleigh fading, its worst-case reduction
// over an uncertainty box, and the rate that saturates a target outage.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covert/model.hpp"

namespace covert::reliability {

inline constexpr double kLn2 = 0.69314718055994530942;

struct OutageQuery {
    double power;     // transmit power P >= 0
    double rate;      // coding rate R >= 0
    double omega_b;   // Bob average channel power > 0
    double sigma_b2;  // Bob noise power > 0
};

// Pr(log2(1 + P|h_b|^2/sigma_b2) < R) with |h_b|^2 ~ Exp(mean omega_b):
// 1 - exp(-(2^R - 1) sigma_b2 / (P omega_b)). The zero-power and zero-rate
// corners return their analytic limits so sweeps never fault.
inline double outage_probability(const OutageQuery& q) {
    if (!(q.power >= 0.0) || !(q.rate >= 0.0) || !(q.omega_b > 0.0) || !(q.sigma_b2 > 0.0)) {
        throw std::domain_error("outage_probability: invalid query");
    }
    if (q.rate == 0.0) return 0.0;
    if (q.power == 0.0) return 1.0;
    const double snr_required = std::expm1(q.rate * kLn2);  // 2^R - 1
    const double exponent = snr_required * q.sigma_b2 / (q.power * q.omega_b);
    return std::clamp(-std::expm1(-exponent), 0.0, 1.0);
}

inline double outage_probability(double power, double rate, double omega_b, double sigma_b2) {
    return outage_probability(OutageQuery{power, rate, omega_b, sigma_b2});
}

// Outage is strictly decreasing in omega_b, so the supremum over the box
// sits at the lower endpoint.
inline double worst_case_outage(double power, double rate, const model::UncertaintyBox& box,
                                double sigma_b2) {
    if (!model::validate(box).empty()) throw std::domain_error("worst_case_outage: invalid box");
    return outage_probability(power, rate, box.omega_b_lo, sigma_b2);
}

// Largest rate with outage <= delta at the given power:
// log2(1 + (P omega_b / sigma_b2) ln(1/(1-delta))). Inverts
// outage_probability exactly: plugging the result back reproduces delta.
inline double max_rate_given_power(double power, double omega_b, double sigma_b2, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("max_rate_given_power: delta must lie in (0,1)");
    }
    if (!(power >= 0.0) || !(omega_b > 0.0) || !(sigma_b2 > 0.0)) {
        throw std::domain_error("max_rate_given_power: invalid inputs");
    }
    if (power == 0.0) return 0.0;
    const double log_margin = -std::log1p(-delta);  // ln(1/(1-delta))
    return std::log1p(power * omega_b / sigma_b2 * log_margin) / kLn2;
}

}  // namespace covert::reliability
