#pragma once

#include "zitter/beta.hpp"

#include <string_view>

namespace zitter {

enum class EntropyUnit { nats, bits };

/// Parses "nats" or "bits"; throws InvalidArgument otherwise.
EntropyUnit parse_entropy_unit(std::string_view text);
std::string_view to_string(EntropyUnit unit) noexcept;

/// Shannon entropy of a direction distribution, 0 <= value <= log 2.
class EntropyValue {
public:
    EntropyValue(double value, EntropyUnit unit);

    double value() const noexcept { return value_; }
    EntropyUnit unit() const noexcept { return unit_; }

    /// Same quantity expressed in `target` units.
    EntropyValue in(EntropyUnit target) const noexcept;

private:
    double value_;
    EntropyUnit unit_;
};

/// Lorentz factor and redshift factor of one velocity.
struct RelativisticFactors {
    double gamma;
    double one_plus_z;
};

/// -p_R log p_R - p_L log p_L with 0 log 0 = 0.
EntropyValue entropy_from_distribution(const DirectionDistribution& d,
                                       EntropyUnit unit = EntropyUnit::nats);

/// Entropy written directly in beta. Defined on the closed interval; gives
/// exactly 0 at |beta| = 1 and exactly S(beta) == S(-beta).
EntropyValue entropy_from_beta(Beta v, EntropyUnit unit = EntropyUnit::nats);

/// (1 - beta^2)^(-1/2). Throws LightSpeedSingularity for |beta| = 1.
double lorentz_gamma(Beta v);

/// sqrt((1 + beta) / (1 - beta)). Throws LightSpeedSingularity for |beta| = 1.
double redshift_factor(Beta v);

RelativisticFactors relativistic_factors(Beta v);

/// log(2 gamma) - beta log(1 + z), in nats.
///
/// Both terms diverge at light speed, so |beta| = 1 throws
/// LightSpeedSingularity; use entropy_from_beta there.
EntropyValue entropy_relativistic_form(Beta v);

} // namespace zitter
