#include "zitter/entropy.hpp"
#include "zitter/errors.hpp"
#include "zitter/kinematics.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace zitter;
using zitter::test::linspace;

// -0.8 ln 0.8 - 0.2 ln 0.2, evaluated to 30 digits.
constexpr double kEntropyOfPoint8 = 0.500402423538187879533;

TEST(EntropyFromDistribution, Examples) {
    EXPECT_DOUBLE_EQ(entropy_from_distribution(DirectionDistribution(0.5, 0.5)).value(),
                     std::numbers::ln2);
    EXPECT_DOUBLE_EQ(
        entropy_from_distribution(DirectionDistribution(0.5, 0.5), EntropyUnit::bits).value(), 1.0);
    EXPECT_EQ(entropy_from_distribution(DirectionDistribution(1.0, 0.0)).value(), 0.0);
    EXPECT_EQ(entropy_from_distribution(DirectionDistribution(0.0, 1.0)).value(), 0.0);
    EXPECT_NEAR(entropy_from_distribution(DirectionDistribution(0.8, 0.2)).value(), kEntropyOfPoint8,
                1e-15);
}

TEST(EntropyFromBeta, Examples) {
    EXPECT_NEAR(entropy_from_beta(Beta(0.0)).value(), std::numbers::ln2, 1e-15);
    EXPECT_EQ(entropy_from_beta(Beta(1.0)).value(), 0.0);
    EXPECT_EQ(entropy_from_beta(Beta(-1.0)).value(), 0.0);
    EXPECT_FALSE(std::signbit(entropy_from_beta(Beta(1.0)).value()));
    EXPECT_NEAR(entropy_from_beta(Beta(0.6)).value(),
                entropy_from_distribution(DirectionDistribution(0.8, 0.2)).value(), 1e-14);
}

TEST(EntropyFromBeta, MatchesDistributionRouteAndOracle) {
    for (const double b : linspace(-1.0, 1.0, 2001)) {
        const double s = entropy_from_beta(Beta(b)).value();
        EXPECT_NEAR(s, entropy_from_distribution(direction_distribution_from_beta(Beta(b))).value(), 1e-14);
        EXPECT_NEAR(s, static_cast<double>(zitter::test::binary_entropy_oracle((1.0L + b) / 2.0L)),
                    1e-14);
    }
}

TEST(EntropyFromBeta, SymmetricExactly) {
    for (const double b : linspace(0.0, 1.0, 1000)) {
        EXPECT_EQ(entropy_from_beta(Beta(b)).value(), entropy_from_beta(Beta(-b)).value()) << b;
    }
}

TEST(EntropyFromBeta, StrictlyDecreasingInSpeed) {
    double previous = entropy_from_beta(Beta(0.0)).value();
    for (const double b : linspace(0.001, 0.999, 999)) {
        const double s = entropy_from_beta(Beta(b)).value();
        EXPECT_LT(s, previous) << b;
        previous = s;
    }
}

TEST(EntropyValue, UnitConversion) {
    for (const double b : linspace(-1.0, 1.0, 201)) {
        const double nats = entropy_from_beta(Beta(b), EntropyUnit::nats).value();
        const double bits = entropy_from_beta(Beta(b), EntropyUnit::bits).value();
        EXPECT_NEAR(bits * std::numbers::ln2, nats, 1e-15);
        EXPECT_NEAR(EntropyValue(nats, EntropyUnit::nats).in(EntropyUnit::bits).value(), bits, 1e-15);
    }
    EXPECT_THROW(EntropyValue(-0.1, EntropyUnit::nats), InvalidArgument);
    EXPECT_THROW(EntropyValue(1.01, EntropyUnit::bits), InvalidArgument);
    EXPECT_EQ(parse_entropy_unit("bits"), EntropyUnit::bits);
    EXPECT_THROW(parse_entropy_unit("hartleys"), InvalidArgument);
}

TEST(RelativisticFactors, Examples) {
    EXPECT_EQ(lorentz_gamma(Beta(0.0)), 1.0);
    EXPECT_EQ(redshift_factor(Beta(0.0)), 1.0);
    EXPECT_NEAR(lorentz_gamma(Beta(0.6)), 1.25, 1e-15);
    EXPECT_NEAR(redshift_factor(Beta(0.6)), 2.0, 1e-15);
    EXPECT_NEAR(lorentz_gamma(Beta(0.8)), 5.0 / 3.0, 1e-15);
    EXPECT_THROW(lorentz_gamma(Beta(1.0)), LightSpeedSingularity);
    EXPECT_THROW(redshift_factor(Beta(-1.0)), LightSpeedSingularity);
}

TEST(RelativisticFactors, Invariants) {
    for (const double b : linspace(-0.999, 0.999, 999)) {
        const auto f = relativistic_factors(Beta(b));
        EXPECT_GE(f.gamma, 1.0);
        EXPECT_GT(f.one_plus_z, 0.0);
        EXPECT_NEAR(f.gamma, 1.0 / std::sqrt(1.0 - b * b), 1e-12 * f.gamma);
        EXPECT_NEAR(f.one_plus_z * redshift_factor(Beta(-b)), 1.0, 1e-12);
        EXPECT_NEAR(std::log(f.one_plus_z), rapidity_from_beta(Beta(b)).value(), 1e-12);
    }
}

TEST(EntropyRelativisticForm, Examples) {
    EXPECT_NEAR(entropy_relativistic_form(Beta(0.0)).value(), std::numbers::ln2, 1e-15);
    EXPECT_NEAR(entropy_relativistic_form(Beta(0.6)).value(), kEntropyOfPoint8, 1e-15);
    EXPECT_NEAR(entropy_relativistic_form(Beta(-0.6)).value(), kEntropyOfPoint8, 1e-15);
    EXPECT_NEAR(std::log(2.5) - 0.6 * std::log(2.0), kEntropyOfPoint8, 1e-15);
    EXPECT_THROW(entropy_relativistic_form(Beta(1.0)), LightSpeedSingularity);
    EXPECT_THROW(entropy_relativistic_form(Beta(-1.0)), LightSpeedSingularity);
}

TEST(EntropyRelativisticForm, AgreesWithDirectForm) {
    double worst = 0.0;
    for (const double b : linspace(-0.999, 0.999, 999)) {
        worst = std::max(worst, std::abs(entropy_relativistic_form(Beta(b)).value() -
                                         entropy_from_beta(Beta(b)).value()));
    }
    EXPECT_LE(worst, 1e-12);
}
