#include "zitter/errors.hpp"
#include "zitter/scales.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace zitter;

namespace {
constexpr double kElectron = 9.1093837015e-31;
// 2 m c^2 / hbar and hbar / (2 m c) from the declared constants, 30 digits.
constexpr double kElectronOmega = 1.55268814221002190271764e21;
constexpr double kElectronLambda = 1.93079633862141679137167e-13;
constexpr double kElectronHz = 2.47117992912896728128532e20;
} // namespace

TEST(ZitterFrequency, Electron) {
    const double omega = zitter_frequency(kElectron);
    EXPECT_NEAR(omega, kElectronOmega, 1e-12 * kElectronOmega);
    EXPECT_GE(omega, 1.0e21);
    EXPECT_LE(omega, 2.0e21);
    EXPECT_NEAR(ParticleScale::from_mass(kElectron).frequency_hz(), kElectronHz, 1e-12 * kElectronHz);
}

TEST(ZitterLength, Electron) {
    const double lambda = zitter_length(kElectron);
    EXPECT_NEAR(lambda, kElectronLambda, 1e-12 * kElectronLambda);
    EXPECT_GE(lambda, 1.5e-13);
    EXPECT_LE(lambda, 2.5e-13);
}

TEST(ZitterScales, ScalingLaws) {
    EXPECT_EQ(zitter_frequency(2.0 * kElectron), 2.0 * zitter_frequency(kElectron));
    EXPECT_EQ(zitter_length(2.0 * kElectron), 0.5 * zitter_length(kElectron));
    EXPECT_LT(zitter_frequency(1e-300), 1e-240);
}

TEST(ZitterScales, LengthTimesFrequencyIsLightSpeed) {
    for (int e = -31; e <= -25; ++e) {
        for (double mantissa = 1.0; mantissa < 10.0; mantissa += 0.7) {
            const double m = mantissa * std::pow(10.0, e);
            const double c = zitter_length(m) * zitter_frequency(m);
            EXPECT_NEAR(c, constants::speed_of_light, 1e-12 * constants::speed_of_light) << m;
            EXPECT_NEAR(zitter_length(m), constants::speed_of_light / zitter_frequency(m),
                        1e-12 * zitter_length(m));
        }
    }
}

TEST(ZitterScales, RejectsNonPositiveMass) {
    EXPECT_THROW(zitter_frequency(0.0), NonPositiveMass);
    EXPECT_THROW(zitter_frequency(-1.0), NonPositiveMass);
    EXPECT_THROW(zitter_length(0.0), NonPositiveMass);
    EXPECT_THROW(zitter_length(std::numeric_limits<double>::quiet_NaN()), NonPositiveMass);
    EXPECT_THROW(ParticleScale::from_mass(-2.0), NonPositiveMass);
}

TEST(ParticleTable, Lookup) {
    EXPECT_EQ(named_particles().size(), 3u);
    EXPECT_EQ(find_particle("electron").mass_kg, kElectron);
    EXPECT_EQ(find_particle("muon").mass_kg, 1.883531627e-28);
    EXPECT_EQ(find_particle("proton").mass_kg, 1.67262192369e-27);
    EXPECT_FALSE(find_particle("proton").provenance.empty());
    EXPECT_THROW(find_particle("tachyon"), UnknownParticle);
}

TEST(ParticleScale, TickIsInverseOmega) {
    const auto s = ParticleScale::from_mass(kElectron);
    EXPECT_DOUBLE_EQ(s.tick_duration_s() * s.omega_rad_per_s, 1.0);
    EXPECT_NEAR(s.tick_duration_s() * constants::speed_of_light, s.lambda_m, 1e-12 * s.lambda_m);
}
