#pragma once

// Exact probability calculus for +/-c motion in one spatial dimension.
//
// A particle moving at an average velocity beta is right-moving with
// probability (1 + beta) / 2. Composing an observer's own direction
// distribution with the particle's yields the particle's distribution as
// seen from the moving observer, and its mean is the relativistic sum of
// the two velocities.

#include "zitter/beta.hpp"

namespace zitter {

/// (1/2 (1 + v), 1/2 (1 - v)). Sums to one exactly and is mirror-symmetric
/// in v bit for bit.
DirectionDistribution direction_distribution_from_beta(Beta v);

/// Mean instantaneous velocity p_right - p_left.
Beta beta_from_direction_distribution(const DirectionDistribution& d);

/// Distribution of the particle as seen by a moving observer.
///
/// `particle` is the particle's direction distribution seen by the reference
/// observer, `observer` the moving observer's distribution seen by the same
/// reference. The result is the normalised product
/// (p_R q_R, p_L q_L) / (p_R q_R + p_L q_L).
///
/// Throws IndeterminateComposition when the normaliser is zero, i.e. when
/// particle and observer both move at light speed in opposite directions.
DirectionDistribution compose_frames(const DirectionDistribution& particle,
                                     const DirectionDistribution& observer);

/// Closed-form relativistic sum (u + v) / (1 + u v).
///
/// Throws IndeterminateComposition for (u, v) = (+1, -1) or (-1, +1).
Beta velocity_addition(Beta u, Beta v);

/// Same quantity as velocity_addition, computed only through
/// direction_distribution_from_beta, compose_frames and
/// beta_from_direction_distribution. Kept as an independent route.
Beta compose_velocity_via_probabilities(Beta u, Beta v);

/// True when (u, v) is one of the two antipodal light-speed pairs.
constexpr bool is_indeterminate_pair(Beta u, Beta v) noexcept {
    return (u.value() == 1.0 && v.value() == -1.0) ||
           (u.value() == -1.0 && v.value() == 1.0);
}

/// atanh(v). Throws LightSpeedRapidity for |v| = 1.
Rapidity rapidity_from_beta(Beta v);

/// tanh(r).
Beta beta_from_rapidity(Rapidity r);

} // namespace zitter
