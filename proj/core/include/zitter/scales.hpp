#pragma once

#include <span>
#include <string_view>

namespace zitter {

namespace constants {
/// Exact SI value, m/s.
inline constexpr double speed_of_light = 299792458.0;
/// CODATA 2018 reduced Planck constant, J s.
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr std::string_view source = "SI 2019 exact c; CODATA 2018 hbar";
} // namespace constants

/// Zitter angular frequency 2 m c^2 / hbar in rad/s.
/// Throws NonPositiveMass for mass <= 0 or non-finite mass.
double zitter_frequency(double mass_kg);

/// Characteristic length hbar / (2 m c) in metres.
double zitter_length(double mass_kg);

/// Mass mapped onto the zitter clock.
struct ParticleScale {
    double mass_kg;
    double omega_rad_per_s;
    double lambda_m;

    /// Throws NonPositiveMass.
    static ParticleScale from_mass(double mass_kg);

    /// omega / 2 pi.
    double frequency_hz() const noexcept { return omega_rad_per_s / (2.0 * constants::pi); }

    /// One zitter tick, 1 / omega.
    double tick_duration_s() const noexcept { return 1.0 / omega_rad_per_s; }
};

struct NamedParticle {
    std::string_view name;
    double mass_kg;
    std::string_view provenance;
};

/// Built-in particle table.
std::span<const NamedParticle> named_particles() noexcept;

/// Case-sensitive lookup; throws UnknownParticle.
const NamedParticle& find_particle(std::string_view name);

} // namespace zitter
