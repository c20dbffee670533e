#pragma once

#include <compare>

namespace zitter {

/// Signed average velocity in natural units (c = 1). Values outside
/// [-1, +1] and non-finite values are rejected, never clamped.
class Beta {
public:
    constexpr Beta() noexcept = default;

    /// Throws InvalidArgument when |value| > 1 or value is not finite.
    explicit Beta(double value);

    constexpr double value() const noexcept { return value_; }

    /// True for |beta| == 1.
    constexpr bool is_light_speed() const noexcept {
        return value_ == 1.0 || value_ == -1.0;
    }

    constexpr Beta operator-() const noexcept { return Beta(-value_, Unchecked{}); }

    friend constexpr auto operator<=>(Beta, Beta) noexcept = default;

private:
    struct Unchecked {};
    constexpr Beta(double value, Unchecked) noexcept : value_(value) {}

    double value_ = 0.0;
};

/// Probabilities of instantaneous right (+c) and left (-c) motion.
///
/// Both entries are non-negative and sum to one within 1e-12.
class DirectionDistribution {
public:
    static constexpr double kSumTolerance = 1e-12;

    /// Throws InvalidArgument if the pair is not a probability distribution.
    DirectionDistribution(double p_right, double p_left);

    constexpr double p_right() const noexcept { return p_right_; }
    constexpr double p_left() const noexcept { return p_left_; }

    friend constexpr bool operator==(const DirectionDistribution&,
                                     const DirectionDistribution&) noexcept = default;

private:
    double p_right_;
    double p_left_;
};

/// Hyperbolic angle atanh(beta). Only finite values exist, so light speed
/// has no rapidity.
class Rapidity {
public:
    constexpr Rapidity() noexcept = default;

    /// Throws InvalidArgument for a non-finite value.
    explicit Rapidity(double value);

    constexpr double value() const noexcept { return value_; }

    friend Rapidity operator+(Rapidity a, Rapidity b) { return Rapidity(a.value_ + b.value_); }
    friend constexpr auto operator<=>(Rapidity, Rapidity) noexcept = default;

private:
    double value_ = 0.0;
};

} // namespace zitter
