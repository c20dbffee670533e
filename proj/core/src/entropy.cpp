#include "zitter/entropy.hpp"

#include "zitter/errors.hpp"
#include "zitter/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zitter {
namespace {

// -p log p with the 0 log 0 = 0 convention; p = 1 gives +0, not -0.
double neg_plogp(double p) noexcept {
    return p > 0.0 && p < 1.0 ? -p * std::log(p) : 0.0;
}

double convert(double nats, EntropyUnit unit) noexcept {
    return unit == EntropyUnit::bits ? nats / std::numbers::ln2 : nats;
}

void require_sublight(Beta v) {
    if (v.is_light_speed()) {
        throw LightSpeedSingularity(v.value());
    }
}

} // namespace

EntropyUnit parse_entropy_unit(std::string_view text) {
    if (text == "nats") return EntropyUnit::nats;
    if (text == "bits") return EntropyUnit::bits;
    throw InvalidArgument("unit must be 'nats' or 'bits', got '" + std::string(text) + "'");
}

std::string_view to_string(EntropyUnit unit) noexcept {
    return unit == EntropyUnit::bits ? "bits" : "nats";
}

EntropyValue::EntropyValue(double value, EntropyUnit unit) : value_(value), unit_(unit) {
    const double upper = unit == EntropyUnit::bits ? 1.0 : std::numbers::ln2;
    // One part in 1e12 of slack above log 2 for rounding in the callers.
    if (!(value >= 0.0) || value > upper * (1.0 + 1e-12)) {
        throw InvalidArgument("entropy outside [0, log 2]: " + std::to_string(value));
    }
}

EntropyValue EntropyValue::in(EntropyUnit target) const noexcept {
    if (target == unit_) return *this;
    const double nats = unit_ == EntropyUnit::bits ? value_ * std::numbers::ln2 : value_;
    return EntropyValue(convert(nats, target), target);
}

EntropyValue entropy_from_distribution(const DirectionDistribution& d, EntropyUnit unit) {
    const double nats = neg_plogp(d.p_right()) + neg_plogp(d.p_left());
    return EntropyValue(convert(nats, unit), unit);
}

EntropyValue entropy_from_beta(Beta v, EntropyUnit unit) {
    const double a = 0.5 * (1.0 + v.value());
    const double b = 0.5 * (1.0 - v.value());
    // Summing in a fixed order of magnitude keeps S(v) == S(-v) exactly.
    const double x = neg_plogp(std::max(a, b));
    const double y = neg_plogp(std::min(a, b));
    return EntropyValue(convert(x + y, unit), unit);
}

double lorentz_gamma(Beta v) {
    require_sublight(v);
    const double b = v.value();
    return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

double redshift_factor(Beta v) {
    require_sublight(v);
    const double b = v.value();
    return std::sqrt((1.0 + b) / (1.0 - b));
}

RelativisticFactors relativistic_factors(Beta v) {
    return {lorentz_gamma(v), redshift_factor(v)};
}

EntropyValue entropy_relativistic_form(Beta v) {
    const auto [gamma, one_plus_z] = relativistic_factors(v);
    const double s = std::log(2.0 * gamma) - v.value() * std::log(one_plus_z);
    // Cancellation near |beta| -> 1 can push the result a few ulp below zero.
    return EntropyValue(std::max(s, 0.0), EntropyUnit::nats);
}

} // namespace zitter
