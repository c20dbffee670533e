#include "zitter/scales.hpp"

#include "zitter/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zitter {
namespace {

void require_positive(double mass_kg) {
    if (!std::isfinite(mass_kg) || !(mass_kg > 0.0)) {
        throw NonPositiveMass(mass_kg);
    }
}

constexpr std::array kParticles{
#define ZITTER_PARTICLE(name, mass, provenance) NamedParticle{#name, mass, provenance},
#include "particles.def"
#undef ZITTER_PARTICLE
};

} // namespace

double zitter_frequency(double mass_kg) {
    require_positive(mass_kg);
    constexpr double c = constants::speed_of_light;
    return 2.0 * mass_kg * c * c / constants::hbar;
}

double zitter_length(double mass_kg) {
    require_positive(mass_kg);
    return constants::hbar / (2.0 * mass_kg * constants::speed_of_light);
}

ParticleScale ParticleScale::from_mass(double mass_kg) {
    return {mass_kg, zitter_frequency(mass_kg), zitter_length(mass_kg)};
}

std::span<const NamedParticle> named_particles() noexcept {
    return kParticles;
}

const NamedParticle& find_particle(std::string_view name) {
    for (const auto& p : kParticles) {
        if (p.name == name) return p;
    }
    throw UnknownParticle(std::string(name));
}

} // namespace zitter
