#include "zitter/verify.hpp"

#include "zitter/entropy.hpp"
#include "zitter/errors.hpp"
#include "zitter/kinematics.hpp"
#include "zitter/scales.hpp"
#include "zitter/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace zitter {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CheckSpec {
    const char* name;
    const char* description;
    double tolerance;
};

constexpr std::array kChecks{
    CheckSpec{"velocity_addition_equivalence",
              "max |(u+v)/(1+uv) - probability route| on 99x99 grid over [-0.98, 0.98]", 1e-12},
    CheckSpec{"commutativity", "max |w(u,v) - w(v,u)| on the grid", 0.0},
    CheckSpec{"identity", "max |w(u,0) - u| on the grid", 0.0},
    CheckSpec{"inverse", "max |w(u,-u)| on the grid", 1e-15},
    CheckSpec{"rapidity_additivity", "max |atanh(w(u,v)) - atanh(u) - atanh(v)| on the grid",
              1e-10},
    CheckSpec{"associativity", "max |w(w(a,b),c) - w(a,w(b,c))| on a 15^3 subgrid", 1e-10},
    CheckSpec{"normalization", "max |Pr(R) + Pr(L) - 1| on 1001 points of [-1, 1]", 0.0},
    CheckSpec{"round_trip", "max |beta(dist(beta)) - beta| on 1001 points of [-1, 1]", 1e-15},
    CheckSpec{"entropy_identity",
              "max |S(beta) - (log 2 gamma - beta log(1+z))| on 999 points of [-0.999, 0.999]",
              1e-12},
    CheckSpec{"entropy_rest", "|S(0) - ln 2|", 1e-15},
    CheckSpec{"entropy_light", "max(S(+1), S(-1))", 0.0},
    CheckSpec{"entropy_symmetry", "max |S(beta) - S(-beta)| on 999 points", 0.0},
    CheckSpec{"monte_carlo_drift",
              "max z-score of iid sample mean against beta, beta in {-0.9,-0.5,0,0.5,0.9}", 5.0},
    CheckSpec{"frame_transform_drift",
              "max z-score of rejection-sampled drift against (u+v)/(1+uv), (u,v) in "
              "{-0.8,-0.4,0,0.4,0.8}^2",
              5.0},
    CheckSpec{"frame_transform_acceptance",
              "max binomial z-score of acceptance rate against (1+uv)/2", 5.0},
    CheckSpec{"telegraph_consistency",
              "max combined z-score between telegraph and iid drifts at matched beta", 5.0},
    CheckSpec{"scale_consistency", "max |lambda omega - c| / c for masses 1e-31..1e-25 kg",
              1e-12},
    CheckSpec{"electron_orders",
              "decades by which electron omega / lambda fall outside [1e21, 2e21] rad/s / "
              "[1.5e-13, 2.5e-13] m",
              0.0},
};

std::vector<double> linspace(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    out.back() = stop;
    return out;
}

template <typename F>
double max_over_grid(const std::vector<double>& grid, F&& f) {
    double worst = 0.0;
    for (const double u : grid) {
        for (const double v : grid) worst = std::max(worst, f(Beta(u), Beta(v)));
    }
    return worst;
}

template <typename F>
double max_over(const std::vector<double>& points, F&& f) {
    double worst = 0.0;
    for (const double b : points) worst = std::max(worst, f(Beta(b)));
    return worst;
}

// |observed - expected| / sigma, with sigma == 0 demanding an exact match.
double z_score(double observed, double expected, double sigma) {
    const double diff = std::abs(observed - expected);
    if (sigma > 0.0) return diff / sigma;
    return diff == 0.0 ? 0.0 : kInf;
}

double decades_outside(double x, double lo, double hi) {
    if (x < lo) return std::log10(lo / x);
    if (x > hi) return std::log10(x / hi);
    return 0.0;
}

} // namespace

VerifyLevel parse_verify_level(std::string_view text) {
    if (text == "fast") return VerifyLevel::fast;
    if (text == "full") return VerifyLevel::full;
    throw InvalidArgument("level must be 'fast' or 'full', got '" + std::string(text) + "'");
}

std::string_view to_string(VerifyLevel level) noexcept {
    return level == VerifyLevel::full ? "full" : "fast";
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> verification_check_names() {
    std::vector<std::string> names;
    for (const auto& c : kChecks) names.emplace_back(c.name);
    return names;
}

VerificationReport run_verification(const VerifyOptions& options) {
    for (const auto& [name, tol] : options.tolerance_overrides) {
        const bool known = std::any_of(kChecks.begin(), kChecks.end(),
                                       [&](const CheckSpec& c) { return name == c.name; });
        if (!known) throw InvalidArgument("unknown verification check '" + name + "'");
        if (!(tol >= 0.0)) throw InvalidArgument("tolerance for '" + name + "' must be >= 0");
    }

    const std::uint64_t ticks = options.level == VerifyLevel::full ? 1'000'000 : 100'000;
    const auto grid = linspace(-0.98, 0.98, 99);
    const auto beta_line = linspace(-1.0, 1.0, 1001);
    const auto entropy_line = linspace(-0.999, 0.999, 999);
    const std::array mc_betas{-0.9, -0.5, 0.0, 0.5, 0.9};
    const std::array frame_betas{-0.8, -0.4, 0.0, 0.4, 0.8};
    std::uint64_t stream = 0;
    auto next_seed = [&] { return replicate_seed(options.seed, stream++); };

    std::vector<std::function<double()>> measures{
        [&] {
            return max_over_grid(grid, [](Beta u, Beta v) {
                return std::abs(velocity_addition(u, v).value() -
                                compose_velocity_via_probabilities(u, v).value());
            });
        },
        [&] {
            return max_over_grid(grid, [](Beta u, Beta v) {
                return std::abs(velocity_addition(u, v).value() - velocity_addition(v, u).value());
            });
        },
        [&] {
            return max_over(grid, [](Beta u) {
                return std::abs(velocity_addition(u, Beta(0.0)).value() - u.value());
            });
        },
        [&] {
            return max_over(grid, [](Beta u) { return std::abs(velocity_addition(u, -u).value()); });
        },
        [&] {
            return max_over_grid(grid, [](Beta u, Beta v) {
                const double lhs = rapidity_from_beta(velocity_addition(u, v)).value();
                const double rhs = rapidity_from_beta(u).value() + rapidity_from_beta(v).value();
                return std::abs(lhs - rhs);
            });
        },
        [&] {
            const auto sub = linspace(-0.98, 0.98, 15);
            double worst = 0.0;
            for (const double a : sub) {
                for (const double b : sub) {
                    for (const double c : sub) {
                        const Beta ba(a), bb(b), bc(c);
                        const double lhs = velocity_addition(velocity_addition(ba, bb), bc).value();
                        const double rhs = velocity_addition(ba, velocity_addition(bb, bc)).value();
                        worst = std::max(worst, std::abs(lhs - rhs));
                    }
                }
            }
            return worst;
        },
        [&] {
            return max_over(beta_line, [](Beta b) {
                const auto d = direction_distribution_from_beta(b);
                return std::abs(d.p_right() + d.p_left() - 1.0);
            });
        },
        [&] {
            return max_over(beta_line, [](Beta b) {
                return std::abs(
                    beta_from_direction_distribution(direction_distribution_from_beta(b)).value() -
                    b.value());
            });
        },
        [&] {
            return max_over(entropy_line, [](Beta b) {
                return std::abs(entropy_from_beta(b).value() -
                                entropy_relativistic_form(b).value());
            });
        },
        [&] { return std::abs(entropy_from_beta(Beta(0.0)).value() - std::numbers::ln2); },
        [&] {
            return std::max(entropy_from_beta(Beta(1.0)).value(),
                            entropy_from_beta(Beta(-1.0)).value());
        },
        [&] {
            return max_over(entropy_line, [](Beta b) {
                return std::abs(entropy_from_beta(b).value() - entropy_from_beta(-b).value());
            });
        },
        [&] {
            double worst = 0.0;
            for (const double b : mc_betas) {
                SimConfig cfg;
                cfg.beta = Beta(b);
                cfg.ticks = ticks;
                cfg.seed = next_seed();
                const auto est = simulate_drift(cfg);
                const double sigma = std::sqrt((1.0 - b * b) / static_cast<double>(ticks));
                worst = std::max(worst, z_score(est.mean, b, sigma));
            }
            return worst;
        },
        [&] {
            double worst = 0.0;
            for (const double u : frame_betas) {
                for (const double v : frame_betas) {
                    const auto obs = observe_from_moving_frame(Beta(u), Beta(v), ticks, next_seed());
                    if (!obs.drift) return kInf;
                    const double expected = (u + v) / (1.0 + u * v);
                    worst = std::max(worst, z_score(obs.drift->mean, expected, obs.drift->std_error));
                }
            }
            return worst;
        },
        [&] {
            double worst = 0.0;
            for (const double u : frame_betas) {
                for (const double v : frame_betas) {
                    const auto obs = observe_from_moving_frame(Beta(u), Beta(v), ticks, next_seed());
                    const double p = 0.5 * (1.0 + u * v);
                    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(ticks));
                    worst = std::max(worst, z_score(obs.acceptance_rate(), p, sigma));
                }
            }
            return worst;
        },
        [&] {
            double worst = 0.0;
            for (const double b : mc_betas) {
                SimConfig iid;
                iid.beta = Beta(b);
                iid.ticks = ticks;
                iid.seed = next_seed();
                SimConfig tele = iid;
                tele.dynamics = Dynamics::telegraph;
                tele.seed = next_seed();
                const auto a = simulate_drift(iid);
                const auto t = simulate_drift(tele);
                const double sigma = std::hypot(a.std_error, t.std_error);
                worst = std::max(worst, z_score(t.mean, a.mean, sigma));
            }
            return worst;
        },
        [&] {
            double worst = 0.0;
            for (int e = -31; e <= -25; ++e) {
                for (const double mantissa : {1.0, 2.5, 5.0, 7.5}) {
                    const double m = mantissa * std::pow(10.0, e);
                    const double product = zitter_length(m) * zitter_frequency(m);
                    worst = std::max(worst, std::abs(product - constants::speed_of_light) /
                                                constants::speed_of_light);
                }
            }
            return worst;
        },
        [&] {
            const double m = find_particle("electron").mass_kg;
            return std::max(decades_outside(zitter_frequency(m), 1.0e21, 2.0e21),
                            decades_outside(zitter_length(m), 1.5e-13, 2.5e-13));
        },
    };

    if (measures.size() != kChecks.size()) throw Error("verification table out of sync");

    VerificationReport report{options.level, options.seed, {}};
    for (std::size_t i = 0; i < kChecks.size(); ++i) {
        const auto& spec = kChecks[i];
        double tolerance = spec.tolerance;
        if (const auto it = options.tolerance_overrides.find(spec.name);
            it != options.tolerance_overrides.end()) {
            tolerance = it->second;
        }
        const double observed = measures[i]();
        report.checks.push_back({spec.name, spec.description, tolerance, observed,
                                 observed <= tolerance});
    }
    return report;
}

} // namespace zitter
