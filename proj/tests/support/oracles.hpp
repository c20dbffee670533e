#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library, so agreement with it is a genuine cross-check.

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zitter::test {

/// Joint-outcome enumeration for the frame composition. The particle's and
/// the observer's directions are independent; conditioning on agreement
/// keeps the (R, R) and (L, L) cells only.
inline std::pair<long double, long double> conditional_on_agreement(long double u, long double v) {
    const long double p_particle_right = (1.0L + v) / 2.0L;
    const long double p_observer_right = (1.0L + u) / 2.0L;
    long double cells[2][2];
    for (int d = 0; d < 2; ++d) {
        for (int e = 0; e < 2; ++e) {
            const long double pd = d == 0 ? p_particle_right : 1.0L - p_particle_right;
            const long double pe = e == 0 ? p_observer_right : 1.0L - p_observer_right;
            cells[d][e] = pd * pe;
        }
    }
    const long double agree = cells[0][0] + cells[1][1];
    return {cells[0][0] / agree, cells[1][1] / agree};
}

inline long double composed_velocity_oracle(long double u, long double v) {
    const auto [r, l] = conditional_on_agreement(u, v);
    return r - l;
}

/// Binary entropy in nats, long double.
inline long double binary_entropy_oracle(long double p) {
    auto term = [](long double x) { return x <= 0.0L ? 0.0L : -x * std::log(x); };
    return term(p) + term(1.0L - p);
}

struct BatchMoments {
    long double mean;
    long double population_variance;
    long double sample_variance;
};

/// Two-pass mean and variance in long double.
template <typename T>
BatchMoments batch_moments(std::span<const T> xs) {
    long double sum = 0.0L;
    for (const auto x : xs) sum += static_cast<long double>(x);
    const long double n = static_cast<long double>(xs.size());
    const long double mean = sum / n;
    long double ss = 0.0L;
    for (const auto x : xs) {
        const long double d = static_cast<long double>(x) - mean;
        ss += d * d;
    }
    return {mean, ss / n, xs.size() > 1 ? ss / (n - 1.0L) : 0.0L};
}

/// 5-sigma half-width for the mean of n +/-1 steps with Pr(+1) = (1+beta)/2.
inline double five_sigma(double beta, std::uint64_t n) {
    return 5.0 * std::sqrt((1.0 - beta * beta) / static_cast<double>(n));
}

inline std::vector<double> linspace(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

} // namespace zitter::test
