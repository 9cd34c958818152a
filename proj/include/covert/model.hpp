#pragma once

// Shared domain types: nominal link parameters, interval uncertainty, and
// design points. Everything is stored in linear units; dB conversion is a
// CLI concern. All types are immutable values and freely shareable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covert::model {

// Nominal physical parameters. Defaults are the baseline used throughout
// the numerical study.
struct SystemParams {
    double omega_b0 = 1.0;      // Bob average channel power
    double sigma_b2 = 1.0;      // Bob noise power
    double sigma_w20 = 1.0;     // Willie noise power, nominal
    double omega_w = 1.0;       // Willie average channel power
    double g_w = 0.2;           // fixed Willie fading power realization |h_w|^2
    std::int64_t n_block = 100; // block length N, channel uses
    double p_max = 10.0;        // peak transmit power
    double delta = 0.1;         // max outage probability, in (0,1)
    double epsilon = 0.2;       // covertness deficit, in (0,1)
};

// Interval bounds for the two uncertain parameters. General boxes may put
// hi above nominal; the width parameterization below pins hi = nominal.
struct UncertaintyBox {
    double omega_b_lo = 1.0;
    double omega_b_hi = 1.0;
    double sigma_w2_lo = 1.0;
    double sigma_w2_hi = 1.0;
};

// Symmetric width parameterization: lo = nominal*(1-u), hi = nominal.
struct UncertaintyWidths {
    double u_b = 0.0;  // in [0,1)
    double u_w = 0.0;  // in [0,1)
};

struct DesignPoint {
    double power = 0.0;  // transmit power P
    double rate = 0.0;   // coding rate R, bits/channel use
};

struct Violation {
    std::string field;
    std::string message;
};

inline std::vector<Violation> validate(const SystemParams& p) {
    std::vector<Violation> v;
    auto positive = [&](double x, const char* name) {
        if (!(x > 0.0)) v.push_back({name, std::string(name) + " must be > 0"});
    };
    positive(p.omega_b0, "omega_b0");
    positive(p.sigma_b2, "sigma_b2");
    positive(p.sigma_w20, "sigma_w20");
    positive(p.omega_w, "omega_w");
    positive(p.g_w, "g_w");
    positive(p.p_max, "p_max");
    if (p.n_block < 1) v.push_back({"n_block", "n_block must be >= 1"});
    if (!(p.delta > 0.0 && p.delta < 1.0)) v.push_back({"delta", "delta must lie in (0,1)"});
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) v.push_back({"epsilon", "epsilon must lie in (0,1)"});
    return v;
}

inline std::vector<Violation> validate(const UncertaintyBox& b) {
    std::vector<Violation> v;
    if (!(b.omega_b_lo > 0.0 && b.omega_b_lo <= b.omega_b_hi)) {
        v.push_back({"omega_b", "need 0 < omega_b_lo <= omega_b_hi"});
    }
    if (!(b.sigma_w2_lo > 0.0 && b.sigma_w2_lo <= b.sigma_w2_hi)) {
        v.push_back({"sigma_w2", "need 0 < sigma_w2_lo <= sigma_w2_hi"});
    }
    return v;
}

inline std::vector<Violation> validate(const UncertaintyWidths& w) {
    std::vector<Violation> v;
    if (!(w.u_b >= 0.0 && w.u_b < 1.0)) v.push_back({"u_b", "u_b must lie in [0,1)"});
    if (!(w.u_w >= 0.0 && w.u_w < 1.0)) v.push_back({"u_w", "u_w must lie in [0,1)"});
    return v;
}

inline void require_valid(const SystemParams& p) {
    const auto v = validate(p);
    if (!v.empty()) throw std::domain_error("invalid SystemParams: " + v.front().field + ": " + v.front().message);
}

inline UncertaintyBox box_from_widths(const SystemParams& p, const UncertaintyWidths& w) {
    if (!validate(w).empty()) throw std::domain_error("box_from_widths: widths must lie in [0,1)");
    require_valid(p);
    return {p.omega_b0 * (1.0 - w.u_b), p.omega_b0, p.sigma_w20 * (1.0 - w.u_w), p.sigma_w20};
}

// Degenerate box pinned at the nominal point; evaluating the robust
// machinery on it reproduces the nominal design.
inline UncertaintyBox nominal_box(const SystemParams& p) {
    return {p.omega_b0, p.omega_b0, p.sigma_w20, p.sigma_w20};
}

}  // namespace covert::model
