#include "zitter/kinematics.hpp"

#include "zitter/errors.hpp"

#include <cmath>
#include <sstream>

namespace zitter {

Beta::Beta(double value) : value_(value) {
    if (!std::isfinite(value) || std::abs(value) > 1.0) {
        std::ostringstream os;
        os.precision(17);
        os << "beta must lie in [-1, 1], got " << value;
        throw InvalidArgument(os.str());
    }
}

DirectionDistribution::DirectionDistribution(double p_right, double p_left)
    : p_right_(p_right), p_left_(p_left) {
    if (!(p_right >= 0.0) || !(p_left >= 0.0) ||
        !(std::abs(p_right + p_left - 1.0) <= kSumTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "not a direction distribution: (" << p_right << ", " << p_left << ")";
        throw InvalidArgument(os.str());
    }
}

Rapidity::Rapidity(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw InvalidArgument("rapidity must be finite");
    }
}

DirectionDistribution direction_distribution_from_beta(Beta v) {
    // The larger probability is formed first and the smaller one as its
    // complement: 1 - p is exact for p in [1/2, 1], so the pair sums to one
    // exactly and v -> -v swaps the entries bit for bit.
    const double major = 0.5 * (1.0 + std::abs(v.value()));
    const double minor = 1.0 - major;
    return v.value() >= 0.0 ? DirectionDistribution(major, minor)
                            : DirectionDistribution(minor, major);
}

Beta beta_from_direction_distribution(const DirectionDistribution& d) {
    const double w = d.p_right() - d.p_left();
    // The sum tolerance lets |w| exceed 1 by at most 1e-12.
    return Beta(std::abs(w) > 1.0 ? std::copysign(1.0, w) : w);
}

DirectionDistribution compose_frames(const DirectionDistribution& particle,
                                     const DirectionDistribution& observer) {
    const double right = particle.p_right() * observer.p_right();
    const double left = particle.p_left() * observer.p_left();
    const double z = right + left;
    if (z == 0.0) {
        throw IndeterminateComposition(observer.p_right() - observer.p_left(),
                                       particle.p_right() - particle.p_left());
    }
    const double p_right = right / z;
    // Whichever side carries the larger share defines the other as its
    // complement so the result sums to one.
    return p_right >= 0.5 ? DirectionDistribution(p_right, 1.0 - p_right)
                          : DirectionDistribution(1.0 - left / z, left / z);
}

Beta velocity_addition(Beta u, Beta v) {
    if (is_indeterminate_pair(u, v)) {
        throw IndeterminateComposition(u.value(), v.value());
    }
    const double w = (u.value() + v.value()) / (1.0 + u.value() * v.value());
    // Mathematically |w| <= 1; rounding can overshoot by one ulp.
    return Beta(std::abs(w) > 1.0 ? std::copysign(1.0, w) : w);
}

Beta compose_velocity_via_probabilities(Beta u, Beta v) {
    if (is_indeterminate_pair(u, v)) {
        throw IndeterminateComposition(u.value(), v.value());
    }
    const auto particle = direction_distribution_from_beta(v);
    const auto observer = direction_distribution_from_beta(u);
    return beta_from_direction_distribution(compose_frames(particle, observer));
}

Rapidity rapidity_from_beta(Beta v) {
    if (v.is_light_speed()) {
        throw LightSpeedRapidity(v.value());
    }
    return Rapidity(std::atanh(v.value()));
}

Beta beta_from_rapidity(Rapidity r) {
    return Beta(std::tanh(r.value()));
}

} // namespace zitter
