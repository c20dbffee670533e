#include "zitter/simulator.hpp"

#include "zitter/errors.hpp"
#include "zitter/kinematics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <thread>

namespace zitter {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform doubles on [0, 1) with 53 random bits.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    double next() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Calls sink(bool right) once per tick.
template <typename Sink>
void sample_ticks(const SimConfig& cfg, Sink&& sink) {
    UniformSource uniform(cfg.seed);
    const double p_right = direction_distribution_from_beta(cfg.beta).p_right();

    if (cfg.dynamics == Dynamics::iid) {
        for (std::uint64_t i = 0; i < cfg.ticks; ++i) {
            sink(uniform.next() < p_right);
        }
        return;
    }

    const auto flip = cfg.resolved_flip();
    bool right = uniform.next() < p_right;
    sink(right);
    for (std::uint64_t i = 1; i < cfg.ticks; ++i) {
        const double threshold = right ? flip.right_to_left : flip.left_to_right;
        if (uniform.next() < threshold) {
            right = !right;
        }
        sink(right);
    }
}

std::uint64_t count_right(const SimConfig& cfg) {
    std::uint64_t right = 0;
    sample_ticks(cfg, [&right](bool r) { right += r ? 1 : 0; });
    return right;
}

[[noreturn]] void invalid(const std::string& what) {
    throw InvalidArgument("invalid simulation config: " + what);
}

bool is_probability(double p) noexcept {
    return p >= 0.0 && p <= 1.0;
}

} // namespace

Dynamics parse_dynamics(std::string_view text) {
    if (text == "iid") return Dynamics::iid;
    if (text == "telegraph") return Dynamics::telegraph;
    throw InvalidArgument("dynamics must be 'iid' or 'telegraph', got '" + std::string(text) +
                          "'");
}

std::string_view to_string(Dynamics dynamics) noexcept {
    return dynamics == Dynamics::telegraph ? "telegraph" : "iid";
}

double FlipProbabilities::stationary_right() const noexcept {
    return left_to_right / (right_to_left + left_to_right);
}

void SimConfig::validate() const {
    if (ticks < 1) invalid("ticks must be at least 1");
    if (tick_duration && !(std::isfinite(*tick_duration) && *tick_duration > 0.0)) {
        invalid("tick duration must be positive");
    }
    if (!flip) return;
    if (dynamics != Dynamics::telegraph) {
        invalid("flip probabilities only apply to telegraph dynamics");
    }
    if (!is_probability(flip->right_to_left) || !is_probability(flip->left_to_right)) {
        invalid("flip probabilities must lie in [0, 1]");
    }
    if (flip->right_to_left + flip->left_to_right == 0.0) {
        invalid("at least one flip probability must be positive");
    }
    const double target = direction_distribution_from_beta(beta).p_right();
    if (!(std::abs(flip->stationary_right() - target) <= kStationaryTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "flip probabilities give stationary Pr(R) = " << flip->stationary_right()
           << " but beta requires " << target;
        invalid(os.str());
    }
}

double SimConfig::resolved_tick_duration() const noexcept {
    if (tick_duration) return *tick_duration;
    if (scale) return scale->tick_duration_s();
    return 1.0;
}

double SimConfig::resolved_speed() const noexcept {
    return scale ? constants::speed_of_light : 1.0;
}

FlipProbabilities SimConfig::resolved_flip() const noexcept {
    if (flip) return *flip;
    const auto d = direction_distribution_from_beta(beta);
    return {kDefaultFlipScale * d.p_left(), kDefaultFlipScale * d.p_right()};
}

double SimConfig::lag1_correlation() const noexcept {
    return dynamics == Dynamics::telegraph ? resolved_flip().lag1_correlation() : 0.0;
}

ZitterPath::ZitterPath(std::vector<std::int8_t> directions, double tick_duration, double speed,
                       double lag1_correlation, std::uint64_t seed)
    : directions_(std::move(directions)),
      tick_duration_(tick_duration),
      speed_(speed),
      lag1_correlation_(lag1_correlation),
      seed_(seed) {
    const bool steps_ok = std::all_of(directions_.begin(), directions_.end(),
                                      [](std::int8_t s) { return s == 1 || s == -1; });
    if (!steps_ok) throw InvalidArgument("every zitter step must be +1 or -1");
    if (!(std::isfinite(tick_duration_) && tick_duration_ > 0.0)) {
        throw InvalidArgument("tick duration must be positive");
    }
    if (!(std::isfinite(speed_) && speed_ > 0.0)) {
        throw InvalidArgument("speed must be positive");
    }
    if (!(lag1_correlation_ >= -1.0 && lag1_correlation_ < 1.0)) {
        throw InvalidArgument("lag-one correlation must lie in [-1, 1)");
    }
}

std::vector<double> ZitterPath::positions() const {
    std::vector<double> out;
    out.reserve(directions_.size());
    const double step = speed_ * tick_duration_;
    std::int64_t net = 0;
    for (const auto s : directions_) {
        net += s;
        out.push_back(static_cast<double>(net) * step);
    }
    return out;
}

double drift_standard_error(double mean, std::uint64_t n, double lag1_correlation) {
    if (n == 0) return 0.0;
    const double inflation = (1.0 + lag1_correlation) / (1.0 - lag1_correlation);
    return std::sqrt(std::max(0.0, 1.0 - mean * mean) / static_cast<double>(n) * inflation);
}

DriftEstimate drift_from_counts(std::uint64_t right, std::uint64_t n, std::uint64_t seed,
                                double lag1_correlation) {
    if (n == 0) throw EmptyPath();
    const auto net = static_cast<double>(right) - static_cast<double>(n - right);
    const double mean = net / static_cast<double>(n);
    return {mean, drift_standard_error(mean, n, lag1_correlation), n, seed};
}

ZitterPath generate_path(const SimConfig& cfg) {
    cfg.validate();
    std::vector<std::int8_t> directions;
    directions.reserve(static_cast<std::size_t>(cfg.ticks));
    sample_ticks(cfg, [&directions](bool r) { directions.push_back(r ? 1 : -1); });
    return ZitterPath(std::move(directions), cfg.resolved_tick_duration(), cfg.resolved_speed(),
                      cfg.lag1_correlation(), cfg.seed);
}

DriftEstimate estimate_drift(const ZitterPath& path) {
    if (path.empty()) throw EmptyPath();
    const auto steps = path.directions();
    const auto right = static_cast<std::uint64_t>(std::count(steps.begin(), steps.end(), 1));
    return drift_from_counts(right, steps.size(), path.seed(), path.lag1_correlation());
}

DriftEstimate simulate_drift(const SimConfig& cfg) {
    cfg.validate();
    return drift_from_counts(count_right(cfg), cfg.ticks, cfg.seed, cfg.lag1_correlation());
}

Observation observe_from_moving_frame(Beta u, Beta v, std::uint64_t ticks, std::uint64_t seed) {
    if (is_indeterminate_pair(u, v)) {
        throw IndeterminateComposition(u.value(), v.value());
    }
    if (ticks == 0) throw InvalidArgument("observation needs at least one tick");

    const double particle_right = direction_distribution_from_beta(v).p_right();
    const double observer_right = direction_distribution_from_beta(u).p_right();
    UniformSource uniform(seed);
    std::uint64_t retained = 0;
    std::uint64_t right = 0;
    for (std::uint64_t i = 0; i < ticks; ++i) {
        const bool particle = uniform.next() < particle_right;
        const bool observer = uniform.next() < observer_right;
        if (particle == observer) {
            ++retained;
            right += particle ? 1 : 0;
        }
    }

    Observation out;
    out.total = ticks;
    out.retained = retained;
    if (retained > 0) out.drift = drift_from_counts(right, retained, seed);
    return out;
}

void RunningMoments::push(double x) noexcept {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
    if (other.n_ == 0) return;
    if (n_ == 0) {
        *this = other;
        return;
    }
    const auto na = static_cast<double>(n_);
    const auto nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    n_ += other.n_;
}

std::optional<double> RunningMoments::mean() const noexcept {
    if (n_ == 0) return std::nullopt;
    return mean_;
}

std::optional<double> RunningMoments::population_variance() const noexcept {
    if (n_ == 0) return std::nullopt;
    return m2_ / static_cast<double>(n_);
}

std::optional<double> RunningMoments::sample_variance() const noexcept {
    if (n_ < 2) return std::nullopt;
    return m2_ / static_cast<double>(n_ - 1);
}

RunningMoments streaming_moments(std::span<const double> values) noexcept {
    RunningMoments m;
    for (const double x : values) m.push(x);
    return m;
}

RunningMoments streaming_moments(std::span<const std::int8_t> steps) noexcept {
    RunningMoments m;
    for (const auto s : steps) m.push(static_cast<double>(s));
    return m;
}

EnsembleResult run_ensemble(const SimConfig& cfg, std::uint64_t replicates, unsigned threads) {
    if (replicates == 0) throw InvalidArgument("replicates must be at least 1");
    cfg.validate();

    std::vector<std::uint64_t> rights(static_cast<std::size_t>(replicates));
    auto run_one = [&cfg, &rights](std::uint64_t r) {
        SimConfig rc = cfg;
        rc.seed = replicate_seed(cfg.seed, r);
        rights[static_cast<std::size_t>(r)] = count_right(rc);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, replicates));
    if (workers <= 1) {
        for (std::uint64_t r = 0; r < replicates; ++r) run_one(r);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (auto r = next.fetch_add(1); r < replicates; r = next.fetch_add(1)) {
                    run_one(r);
                }
            });
        }
    }

    // Integer tick counts pool exactly, so the result is independent of the
    // order in which replicates finished.
    const double rho = cfg.lag1_correlation();
    EnsembleResult out;
    out.replicates.reserve(rights.size());
    std::uint64_t total_right = 0;
    for (std::uint64_t r = 0; r < replicates; ++r) {
        const auto right = rights[static_cast<std::size_t>(r)];
        out.replicates.push_back(drift_from_counts(right, cfg.ticks, replicate_seed(cfg.seed, r), rho));
        out.replicate_means.push(out.replicates.back().mean);
        total_right += right;
    }
    out.pooled = drift_from_counts(total_right, cfg.ticks * replicates, cfg.seed, rho);
    return out;
}

} // namespace zitter
