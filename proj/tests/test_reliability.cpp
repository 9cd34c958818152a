#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "covert/reliability.hpp"

using namespace covert;

namespace {
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

TEST_CASE("outage closed form", "[reliability]") {
    CHECK_THAT(reliability::outage_probability(1.0, 1.0, 1.0, 1.0),
               Catch::Matchers::WithinRel(0.63212055882855768, 1e-14));  // 1 - e^{-1}
    CHECK(reliability::outage_probability(0.7, 0.0, 1.3, 0.9) == 0.0);
    CHECK(reliability::outage_probability(0.0, 0.5, 1.0, 1.0) == 1.0);
    // Table II nominal design point saturates delta = 0.1.
    CHECK_THAT(reliability::outage_probability(0.253347, 0.038005, 1.0, 1.0),
               Catch::Matchers::WithinAbs(0.1, 1e-5));
    CHECK_THROWS_AS(reliability::outage_probability(-1.0, 1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reliability::outage_probability(1.0, 1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("outage matches fading simulation", "[reliability]") {
    // |h_b|^2 ~ Exp(mean omega_b); outage iff log2(1 + P|h|^2/sigma) < R.
    std::mt19937_64 rng(31);
    const double power = 0.8, rate = 0.5, omega_b = 1.4, sigma_b2 = 0.9;
    constexpr int trials = 1000000;
    int outages = 0;
    for (int i = 0; i < trials; ++i) {
        const double h2 = -omega_b * std::log1p(-uniform01(rng));
        outages += (std::log2(1.0 + power * h2 / sigma_b2) < rate);
    }
    const double p = reliability::outage_probability(power, rate, omega_b, sigma_b2);
    const double se = std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::fabs(static_cast<double>(outages) / trials - p) <= 3.0 * se);
}

TEST_CASE("outage strictly decreasing in omega_b", "[reliability]") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 1000; ++i) {
        const double power = 0.01 + 2.0 * uniform01(rng);
        const double rate = 0.001 + 0.5 * uniform01(rng);
        const double omega = 0.1 + 3.0 * uniform01(rng);
        const double bump = 0.01 + uniform01(rng);
        REQUIRE(reliability::outage_probability(power, rate, omega + bump, 1.0) <
                reliability::outage_probability(power, rate, omega, 1.0));
    }
}

TEST_CASE("worst case outage sits at the lower endpoint", "[reliability]") {
    const model::UncertaintyBox degenerate{0.7, 0.7, 1.0, 1.0};
    CHECK(reliability::worst_case_outage(0.4, 0.1, degenerate, 1.0) ==
          reliability::outage_probability(0.4, 0.1, 0.7, 1.0));

    // Table II row u_b = u_w = 0.2 saturates delta.
    const model::UncertaintyBox row{0.8, 1.0, 0.8, 1.0};
    CHECK_THAT(reliability::worst_case_outage(0.202678, 0.024438, row, 1.0),
               Catch::Matchers::WithinAbs(0.1, 1e-5));

    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        const double lo = 0.2 + uniform01(rng);
        const double hi = lo + uniform01(rng);
        const model::UncertaintyBox box{lo, hi, 1.0, 1.0};
        const double power = 0.05 + uniform01(rng);
        const double rate = 0.01 + 0.2 * uniform01(rng);
        const double worst = reliability::worst_case_outage(power, rate, box, 1.0);
        CHECK(worst >= reliability::outage_probability(power, rate, hi, 1.0));

        // Sampled supremum over the interval never exceeds the endpoint value.
        double sup = 0.0;
        for (int k = 0; k <= 100; ++k) {
            const double omega = lo + (hi - lo) * k / 100.0;
            sup = std::max(sup, reliability::outage_probability(power, rate, omega, 1.0));
        }
        CHECK_THAT(sup, Catch::Matchers::WithinAbs(worst, 1e-15));
    }
}

TEST_CASE("max_rate_given_power reference values", "[reliability]") {
    // Table II anchors.
    CHECK_THAT(reliability::max_rate_given_power(0.253347, 1.0, 1.0, 0.1),
               Catch::Matchers::WithinAbs(0.038005, 1e-6));
    CHECK_THAT(reliability::max_rate_given_power(0.101339, 0.4, 1.0, 0.1),
               Catch::Matchers::WithinAbs(0.006148, 1e-6));
    CHECK(reliability::max_rate_given_power(0.0, 1.0, 1.0, 0.1) == 0.0);
    CHECK_THROWS_AS(reliability::max_rate_given_power(1.0, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(reliability::max_rate_given_power(1.0, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("rate inversion reproduces the outage target", "[reliability]") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 1000; ++i) {
        const double power = 0.01 + 4.0 * uniform01(rng);
        const double omega = 0.2 + 2.0 * uniform01(rng);
        const double sigma = 0.2 + 2.0 * uniform01(rng);
        const double delta = 0.01 + 0.9 * uniform01(rng);
        const double rate = reliability::max_rate_given_power(power, omega, sigma, delta);
        REQUIRE_THAT(reliability::outage_probability(power, rate, omega, sigma),
                     Catch::Matchers::WithinAbs(delta, 1e-12));
    }
}
