#pragma once

// Seeded Monte Carlo realisation of +/-c motion.
//
// Every tick the particle moves exactly one step left or right at light
// speed. Two reversal models share the same stationary law
// Pr(right) = (1 + beta) / 2:
//   iid        independent Bernoulli draws per tick
//   telegraph  two-state Markov chain started from its stationary law
//
// All randomness comes from one 64-bit seed. The tick sampler is seeded
// with splitmix64(seed) feeding std::mt19937_64, and uniforms are formed
// from the top 53 bits, so a given seed reproduces bit-identical paths on
// any conforming platform.

#include "zitter/beta.hpp"
#include "zitter/scales.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace zitter {

enum class Dynamics { iid, telegraph };

/// Parses "iid" or "telegraph"; throws InvalidArgument otherwise.
Dynamics parse_dynamics(std::string_view text);
std::string_view to_string(Dynamics dynamics) noexcept;

/// Per-tick reversal probabilities of the telegraph chain.
struct FlipProbabilities {
    double right_to_left;
    double left_to_right;

    /// left_to_right / (right_to_left + left_to_right).
    double stationary_right() const noexcept;

    /// Lag-one autocorrelation 1 - right_to_left - left_to_right.
    double lag1_correlation() const noexcept { return 1.0 - right_to_left - left_to_right; }
};

struct SimConfig {
    /// Telegraph default: flip probabilities kDefaultFlipScale * (Pr(L), Pr(R)),
    /// i.e. lag-one correlation 1 - kDefaultFlipScale.
    static constexpr double kDefaultFlipScale = 0.5;
    static constexpr double kStationaryTolerance = 1e-12;

    Beta beta;
    std::uint64_t ticks = 1;
    std::uint64_t seed = 0;
    Dynamics dynamics = Dynamics::iid;
    std::optional<FlipProbabilities> flip;
    /// Seconds per tick. Falls back to 1/omega of `scale`, else 1.0.
    std::optional<double> tick_duration;
    std::optional<ParticleScale> scale;

    /// Throws InvalidArgument when the configuration is unusable.
    void validate() const;

    double resolved_tick_duration() const noexcept;
    /// Speed used to turn tick counts into positions: c in m/s with a
    /// physical scale attached, 1 otherwise.
    double resolved_speed() const noexcept;
    /// Explicit flip pair or the default one for `beta`.
    FlipProbabilities resolved_flip() const noexcept;
    /// 0 for iid, the chain's lag-one correlation for telegraph.
    double lag1_correlation() const noexcept;
};

/// Sequence of +1 / -1 ticks.
class ZitterPath {
public:
    /// Throws InvalidArgument if any step is not +1 or -1, or the duration or
    /// speed is not positive, or lag1_correlation is outside [-1, 1).
    explicit ZitterPath(std::vector<std::int8_t> directions, double tick_duration = 1.0,
                        double speed = 1.0, double lag1_correlation = 0.0,
                        std::uint64_t seed = 0);

    std::span<const std::int8_t> directions() const noexcept { return directions_; }
    std::size_t size() const noexcept { return directions_.size(); }
    bool empty() const noexcept { return directions_.empty(); }
    double tick_duration() const noexcept { return tick_duration_; }
    double speed() const noexcept { return speed_; }
    double lag1_correlation() const noexcept { return lag1_correlation_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Position after each tick: cumulative sum * speed * tick_duration.
    std::vector<double> positions() const;

private:
    std::vector<std::int8_t> directions_;
    double tick_duration_;
    double speed_;
    double lag1_correlation_;
    std::uint64_t seed_;
};

struct DriftEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const DriftEstimate&, const DriftEstimate&) = default;
};

/// Standard error of a mean of n +/-1 steps with lag-one correlation rho:
/// sqrt(max(0, 1 - mean^2) / n * (1 + rho) / (1 - rho)).
double drift_standard_error(double mean, std::uint64_t n, double lag1_correlation = 0.0);

/// Drift estimate from `right` right-moving ticks out of `n`.
DriftEstimate drift_from_counts(std::uint64_t right, std::uint64_t n, std::uint64_t seed,
                                double lag1_correlation = 0.0);

ZitterPath generate_path(const SimConfig& cfg);

/// Throws EmptyPath.
DriftEstimate estimate_drift(const ZitterPath& path);

/// Generates cfg.ticks ticks and counts them without storing the path.
/// Equal to estimate_drift(generate_path(cfg)).
DriftEstimate simulate_drift(const SimConfig& cfg);

struct Observation {
    /// Empty when no tick was retained.
    std::optional<DriftEstimate> drift;
    std::uint64_t total = 0;
    std::uint64_t retained = 0;

    double acceptance_rate() const noexcept {
        return total == 0 ? 0.0 : static_cast<double>(retained) / static_cast<double>(total);
    }
};

/// Rejection-sampled view of the particle from a moving observer.
///
/// Each tick draws the particle's direction D (right w.p. (1 + v) / 2) and
/// the observer's direction E (right w.p. (1 + u) / 2). The tick is kept iff
/// D == E and the drift is the mean of D over kept ticks. Conditioning on
/// D == E reproduces exactly the normalised product of compose_frames, so
/// the drift tends to (u + v) / (1 + u v) and the acceptance rate to
/// (1 + u v) / 2.
///
/// Throws IndeterminateComposition for the antipodal light-speed pair and
/// InvalidArgument for ticks == 0.
Observation observe_from_moving_frame(Beta u, Beta v, std::uint64_t ticks, std::uint64_t seed);

/// Seed of replicate r: seed + r * 0x9E3779B97F4A7C15 (mod 2^64), the
/// SplitMix64 stream increment. Replicate 0 keeps the caller's seed.
constexpr std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate) noexcept {
    return seed + replicate * 0x9E3779B97F4A7C15ULL;
}

/// Single-pass Welford accumulator with Chan's pairwise merge.
class RunningMoments {
public:
    void push(double x) noexcept;
    void merge(const RunningMoments& other) noexcept;

    std::uint64_t count() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::optional<double> mean() const noexcept;
    /// Divides by n.
    std::optional<double> population_variance() const noexcept;
    /// Divides by n - 1; empty below two samples.
    std::optional<double> sample_variance() const noexcept;

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

RunningMoments streaming_moments(std::span<const double> values) noexcept;
RunningMoments streaming_moments(std::span<const std::int8_t> steps) noexcept;

struct EnsembleResult {
    std::vector<DriftEstimate> replicates;
    /// Tick-weighted pooled drift; its seed is the caller's seed.
    DriftEstimate pooled;
    /// Spread of the replicate means.
    RunningMoments replicate_means;
};

/// Runs `replicates` independent copies of cfg with seeds
/// replicate_seed(cfg.seed, r). Work is spread over `threads` workers
/// (0 picks hardware concurrency); the result does not depend on it.
/// Throws InvalidArgument for replicates == 0.
EnsembleResult run_ensemble(const SimConfig& cfg, std::uint64_t replicates,
                            unsigned threads = 0);

} // namespace zitter
