#include "zitter/cli/app.hpp"

#include "zitter/zitter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace zitter::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    bool json_output = true;
    std::string csv_path;
    std::string unit = "nats";
    std::string replay_path;
};

struct ComposeOptions {
    double u = 0.0;
    double v = 0.0;
};

struct SimulateOptions {
    double beta = 0.0;
    std::uint64_t ticks = 1'000'000;
    std::string dynamics = "iid";
    std::vector<double> flip;
    std::optional<double> tick_duration;
    std::string particle;
    std::optional<double> mass_kg;
    std::uint64_t replicates = 1;
    unsigned threads = 0;
    std::string path_csv;
};

struct ObserveOptions {
    double u = 0.0;
    double v = 0.0;
    std::uint64_t ticks = 1'000'000;
};

struct EntropyOptions {
    std::optional<double> beta;
    std::string grid;
};

struct ScalesOptions {
    std::string particle;
    std::optional<double> mass_kg;
};

struct VerifyCliOptions {
    std::string level = "fast";
    std::vector<std::string> tolerance_overrides;
};

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest(std::string_view command, const std::vector<std::string>& argv, json parameters,
              std::optional<std::uint64_t> seed) {
    json m;
    m["command"] = command;
    m["argv"] = argv;
    m["parameters"] = std::move(parameters);
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["constants"] = {{"speed_of_light_m_per_s", constants::speed_of_light},
                      {"hbar_J_s", constants::hbar},
                      {"source", constants::source}};
    m["version"] = zitter::version;
    m["timestamp"] = utc_timestamp();
    return m;
}

json to_json(const DirectionDistribution& d) {
    return {{"p_right", d.p_right()}, {"p_left", d.p_left()}};
}

json to_json(const DriftEstimate& e) {
    return {{"mean", e.mean}, {"std_error", e.std_error}, {"n", e.n}, {"seed", e.seed}};
}

// Null where the quantity diverges at light speed.
template <typename F>
json finite_or_null(Beta b, F&& f) {
    if (b.is_light_speed()) return nullptr;
    return f(b);
}

void write_json(std::ostream& out, const json& j) {
    out << j.dump(2) << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path);
    if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
    return file;
}

// start:stop:count, inclusive of both endpoints.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw InvalidArgument("grid must be start:stop:count, got '" + spec + "'");

    auto parse_number = [&spec](const std::string& s, auto& value) {
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw InvalidArgument("malformed grid '" + spec + "'");
        }
    };
    double start = 0.0, stop = 0.0;
    long long count = 0;
    parse_number(parts[0], start);
    parse_number(parts[1], stop);
    parse_number(parts[2], count);
    if (count < 1) throw InvalidArgument("grid count must be at least 1");
    if (count == 1 && start != stop) {
        throw InvalidArgument("a one-point grid needs start == stop");
    }
    Beta{start};
    Beta{stop};

    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + static_cast<double>(i) * step;
    out.back() = stop;
    return out;
}

int cmd_compose(const GlobalOptions& g, const ComposeOptions& o, const std::vector<std::string>& argv,
                std::ostream& out) {
    const Beta u(o.u), v(o.v);
    const auto unit = parse_entropy_unit(g.unit);
    const Beta w = velocity_addition(u, v);
    const Beta w_prob = compose_velocity_via_probabilities(u, v);
    const auto particle = direction_distribution_from_beta(v);
    const auto observer = direction_distribution_from_beta(u);
    const auto composed = compose_frames(particle, observer);

    json j;
    j["u"] = u.value();
    j["v"] = v.value();
    j["w"] = w.value();
    j["w_probability_route"] = w_prob.value();
    j["particle_distribution"] = to_json(particle);
    j["observer_distribution"] = to_json(observer);
    j["composed_distribution"] = to_json(composed);
    j["entropy"] = {{"unit", to_string(unit)},
                    {"particle", entropy_from_distribution(particle, unit).value()},
                    {"observer", entropy_from_distribution(observer, unit).value()},
                    {"composed", entropy_from_distribution(composed, unit).value()}};
    j["manifest"] = manifest("compose", argv, {{"u", o.u}, {"v", o.v}, {"unit", g.unit}}, std::nullopt);
    write_json(out, j);
    return kSuccess;
}

void write_path_csv(const ZitterPath& path, const std::string& file_path) {
    auto file = open_output(file_path);
    file << "tick,direction,position\n";
    const auto steps = path.directions();
    const auto positions = path.positions();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        file << (i + 1) << ',' << (steps[i] > 0 ? "+1" : "-1") << ',' << format_double(positions[i])
             << '\n';
    }
    if (!file) throw InvalidArgument("failed writing '" + file_path + "'");
}

std::optional<ParticleScale> resolve_scale(const std::string& particle, std::optional<double> mass_kg) {
    if (!particle.empty() && mass_kg) {
        throw InvalidArgument("give either --particle or --mass-kg, not both");
    }
    if (!particle.empty()) return ParticleScale::from_mass(find_particle(particle).mass_kg);
    if (mass_kg) return ParticleScale::from_mass(*mass_kg);
    return std::nullopt;
}

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& o, const std::vector<std::string>& argv,
                 std::ostream& out) {
    SimConfig cfg;
    cfg.beta = Beta(o.beta);
    cfg.ticks = o.ticks;
    cfg.seed = g.seed.value_or(kDefaultSeed);
    cfg.dynamics = parse_dynamics(o.dynamics);
    if (!o.flip.empty()) {
        if (o.flip.size() != 2) throw InvalidArgument("--flip takes right_to_left,left_to_right");
        cfg.flip = FlipProbabilities{o.flip[0], o.flip[1]};
    }
    cfg.tick_duration = o.tick_duration;
    cfg.scale = resolve_scale(o.particle, o.mass_kg);
    cfg.validate();
    if (o.replicates == 0) throw InvalidArgument("--replicates must be at least 1");

    std::string path_csv = o.path_csv.empty() ? g.csv_path : o.path_csv;
    if (!path_csv.empty() && o.replicates != 1) {
        throw InvalidArgument("a path dump needs --replicates 1");
    }

    json j;
    if (o.replicates == 1) {
        DriftEstimate est;
        if (!path_csv.empty()) {
            const auto path = generate_path(cfg);
            write_path_csv(path, path_csv);
            est = estimate_drift(path);
        } else {
            est = simulate_drift(cfg);
        }
        j = to_json(est);
    } else {
        const auto ensemble = run_ensemble(cfg, o.replicates, o.threads);
        j = to_json(ensemble.pooled);
        json reps = json::array();
        for (const auto& r : ensemble.replicates) reps.push_back(to_json(r));
        j["replicates"] = std::move(reps);
        j["replicate_mean_sample_variance"] =
            ensemble.replicate_means.sample_variance() ? json(*ensemble.replicate_means.sample_variance())
                                                       : json(nullptr);
    }
    j["beta"] = cfg.beta.value();
    j["dynamics"] = to_string(cfg.dynamics);
    j["lag1_correlation"] = cfg.lag1_correlation();
    j["tick_duration_s"] = cfg.resolved_tick_duration();
    if (cfg.dynamics == Dynamics::telegraph) {
        const auto flip = cfg.resolved_flip();
        j["flip"] = {{"right_to_left", flip.right_to_left}, {"left_to_right", flip.left_to_right}};
    }
    if (!path_csv.empty()) j["path_csv"] = path_csv;

    json params = {{"beta", o.beta},
                   {"ticks", o.ticks},
                   {"dynamics", o.dynamics},
                   {"replicates", o.replicates},
                   {"tick_duration_s", cfg.resolved_tick_duration()}};
    if (cfg.flip) params["flip"] = o.flip;
    if (cfg.scale) params["mass_kg"] = cfg.scale->mass_kg;
    if (!o.particle.empty()) params["particle"] = o.particle;
    j["manifest"] = manifest("simulate", argv, std::move(params), cfg.seed);
    write_json(out, j);
    return kSuccess;
}

int cmd_observe(const GlobalOptions& g, const ObserveOptions& o, const std::vector<std::string>& argv,
                std::ostream& out) {
    const Beta u(o.u), v(o.v);
    if (o.ticks == 0) throw InvalidArgument("--ticks must be at least 1");
    const std::uint64_t seed = g.seed.value_or(kDefaultSeed);
    const auto obs = observe_from_moving_frame(u, v, o.ticks, seed);

    json j;
    if (obs.drift) {
        j = to_json(*obs.drift);
        j["drift"] = obs.drift->mean;
        j["status"] = "ok";
    } else {
        j = {{"mean", nullptr}, {"std_error", nullptr}, {"n", 0}, {"seed", seed}};
        j["drift"] = nullptr;
        j["status"] = "no_accepted_ticks";
    }
    j["acceptance_rate"] = obs.acceptance_rate();
    j["retained"] = obs.retained;
    j["total"] = obs.total;
    j["u"] = u.value();
    j["v"] = v.value();
    j["expected_drift"] = velocity_addition(u, v).value();
    j["expected_acceptance_rate"] = 0.5 * (1.0 + u.value() * v.value());
    j["manifest"] = manifest("observe", argv, {{"u", o.u}, {"v", o.v}, {"ticks", o.ticks}}, seed);
    write_json(out, j);
    return kSuccess;
}

void write_entropy_csv(std::ostream& os, const std::vector<double>& grid) {
    os << "beta,S_nats,S_bits,gamma,one_plus_z\n";
    for (const double x : grid) {
        const Beta b(x);
        const double gamma = b.is_light_speed() ? HUGE_VAL : lorentz_gamma(b);
        double one_plus_z = 0.0;
        if (b.value() == 1.0) {
            one_plus_z = HUGE_VAL;
        } else if (b.value() != -1.0) {
            one_plus_z = redshift_factor(b);
        }
        os << format_double(x) << ',' << format_double(entropy_from_beta(b).value()) << ','
           << format_double(entropy_from_beta(b, EntropyUnit::bits).value()) << ','
           << format_double(gamma) << ',' << format_double(one_plus_z) << '\n';
    }
}

int cmd_entropy(const GlobalOptions& g, const EntropyOptions& o, const std::vector<std::string>& argv,
                std::ostream& out) {
    const auto unit = parse_entropy_unit(g.unit);
    if (o.beta.has_value() == !o.grid.empty()) {
        throw InvalidArgument("give exactly one of --beta or --grid");
    }

    if (!o.grid.empty()) {
        const auto grid = parse_grid(o.grid);
        if (g.csv_path.empty()) {
            write_entropy_csv(out, grid);
            return kSuccess;
        }
        auto file = open_output(g.csv_path);
        write_entropy_csv(file, grid);
        json j = {{"rows", grid.size()}, {"csv", g.csv_path}};
        j["manifest"] = manifest("entropy", argv, {{"grid", o.grid}}, std::nullopt);
        write_json(out, j);
        return kSuccess;
    }

    const Beta b(*o.beta);
    json j;
    j["beta"] = b.value();
    j["unit"] = to_string(unit);
    j["S"] = entropy_from_beta(b, unit).value();
    j["S_nats"] = entropy_from_beta(b).value();
    j["S_bits"] = entropy_from_beta(b, EntropyUnit::bits).value();
    j["S_relativistic_nats"] = finite_or_null(b, [](Beta x) { return entropy_relativistic_form(x).value(); });
    j["gamma"] = finite_or_null(b, [](Beta x) { return lorentz_gamma(x); });
    j["one_plus_z"] = finite_or_null(b, [](Beta x) { return redshift_factor(x); });
    j["rapidity"] = finite_or_null(b, [](Beta x) { return rapidity_from_beta(x).value(); });
    j["distribution"] = to_json(direction_distribution_from_beta(b));
    j["manifest"] = manifest("entropy", argv, {{"beta", *o.beta}, {"unit", g.unit}}, std::nullopt);
    write_json(out, j);
    return kSuccess;
}

int cmd_scales(const ScalesOptions& o, const std::vector<std::string>& argv, std::ostream& out) {
    if (o.particle.empty() == !o.mass_kg.has_value()) {
        throw InvalidArgument("give exactly one of --particle or --mass-kg");
    }
    const auto scale = *resolve_scale(o.particle, o.mass_kg);
    json j;
    if (!o.particle.empty()) {
        const auto& p = find_particle(o.particle);
        j["particle"] = p.name;
        j["mass_provenance"] = p.provenance;
    }
    j["mass_kg"] = scale.mass_kg;
    j["omega_rad_per_s"] = scale.omega_rad_per_s;
    j["frequency_hz"] = scale.frequency_hz();
    j["lambda_m"] = scale.lambda_m;
    j["tick_duration_s"] = scale.tick_duration_s();
    j["lambda_times_omega_m_per_s"] = scale.lambda_m * scale.omega_rad_per_s;
    json params;
    if (!o.particle.empty()) params["particle"] = o.particle;
    if (o.mass_kg) params["mass_kg"] = *o.mass_kg;
    j["manifest"] = manifest("scales", argv, std::move(params), std::nullopt);
    write_json(out, j);
    return kSuccess;
}

int cmd_verify(const GlobalOptions& g, const VerifyCliOptions& o, const std::vector<std::string>& argv,
               std::ostream& out) {
    VerifyOptions options;
    options.level = parse_verify_level(o.level);
    if (g.seed) options.seed = *g.seed;
    for (const auto& item : o.tolerance_overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("--set-tolerance expects name=value");
        double tol = 0.0;
        const auto text = item.substr(eq + 1);
        const auto res = std::from_chars(text.data(), text.data() + text.size(), tol);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            throw InvalidArgument("bad tolerance in '" + item + "'");
        }
        options.tolerance_overrides[item.substr(0, eq)] = tol;
    }

    const auto report = run_verification(options);
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"description", c.description},
                          {"tolerance", c.tolerance},
                          {"observed", std::isfinite(c.observed) ? json(c.observed) : json("inf")},
                          {"passed", c.passed}});
    }
    json j = {{"level", to_string(report.level)},
              {"seed", report.seed},
              {"passed", report.passed()},
              {"checks", std::move(checks)}};
    j["manifest"] = manifest("verify", argv,
                             {{"level", o.level}, {"tolerance_overrides", o.tolerance_overrides}},
                             report.seed);
    write_json(out, j);
    return report.passed() ? kSuccess : kVerificationFailed;
}

std::vector<std::string> load_replay_argv(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InvalidArgument("cannot read manifest '" + path + "'");
    json j;
    try {
        j = json::parse(file);
    } catch (const json::exception& e) {
        throw InvalidArgument("manifest '" + path + "' is not valid JSON: " + e.what());
    }
    const json* m = j.contains("manifest") ? &j["manifest"] : &j;
    if (!m->contains("argv") || !(*m)["argv"].is_array()) {
        throw InvalidArgument("manifest '" + path + "' has no argv array");
    }
    return (*m)["argv"].get<std::vector<std::string>>();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool allow_replay) {
    CLI::App app{"Statistical zitter kinematics: +/-c motion, relativistic composition, entropy"};
    app.name("zitter");
    app.fallthrough();
    app.require_subcommand(allow_replay ? 0 : 1, 1);

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Seed for all randomness (default 42)");
    app.add_flag("--json", g.json_output, "Emit JSON (default)");
    app.add_option("--csv", g.csv_path, "Write bulk series CSV to this path");
    app.add_option("--unit", g.unit, "Entropy unit")->check(CLI::IsMember({"nats", "bits"}));
    if (allow_replay) {
        app.add_option("--replay", g.replay_path, "Re-run the command recorded in a result manifest");
    }

    ComposeOptions compose;
    auto* c = app.add_subcommand("compose", "Compose observer velocity u with particle velocity v");
    c->add_option("--u", compose.u, "Observer velocity in units of c")->required();
    c->add_option("--v", compose.v, "Particle velocity in units of c")->required();

    SimulateOptions sim;
    auto* s = app.add_subcommand("simulate", "Monte Carlo +/-c path and drift estimate");
    s->add_option("--beta", sim.beta, "Target drift velocity")->required();
    s->add_option("--ticks", sim.ticks, "Ticks per path")->capture_default_str();
    s->add_option("--dynamics", sim.dynamics, "iid or telegraph")->capture_default_str();
    s->add_option("--flip", sim.flip, "Telegraph flip probabilities right_to_left,left_to_right")
        ->delimiter(',')
        ->expected(2);
    s->add_option("--tick-duration", sim.tick_duration, "Seconds per tick");
    s->add_option("--particle", sim.particle, "Attach a named particle scale (tick = 1/omega)");
    s->add_option("--mass-kg", sim.mass_kg, "Attach a particle scale by mass");
    s->add_option("--replicates", sim.replicates, "Independent replicates")->capture_default_str();
    s->add_option("--threads", sim.threads, "Worker threads for replicates (0 = auto)");
    s->add_option("--path", sim.path_csv, "Write the tick path as CSV");

    ObserveOptions obs;
    auto* o = app.add_subcommand("observe", "Rejection-sampled particle drift seen from a moving observer");
    o->add_option("--u", obs.u, "Observer velocity")->required();
    o->add_option("--v", obs.v, "Particle velocity")->required();
    o->add_option("--ticks", obs.ticks, "Ticks")->capture_default_str();

    EntropyOptions ent;
    auto* e = app.add_subcommand("entropy", "Direction entropy, gamma and 1+z");
    e->add_option("--beta", ent.beta, "Velocity");
    e->add_option("--grid", ent.grid, "start:stop:count sweep (CSV)");

    ScalesOptions sc;
    auto* p = app.add_subcommand("scales", "Zitter frequency and length for a mass");
    p->add_option("--particle", sc.particle, "electron, muon or proton");
    p->add_option("--mass-kg", sc.mass_kg, "Mass in kilograms");

    VerifyCliOptions ver;
    auto* v = app.add_subcommand("verify", "Run the invariant suite");
    v->add_option("--level", ver.level, "fast or full")->capture_default_str();
    v->add_option("--set-tolerance", ver.tolerance_overrides, "Override a check tolerance, name=value");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    if (!g.replay_path.empty()) {
        if (!app.get_subcommands().empty()) {
            err << "error: --replay cannot be combined with a subcommand\n";
            return kInvalidInput;
        }
        return dispatch(load_replay_argv(g.replay_path), out, err, false);
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return kInvalidInput;
    }

    if (c->parsed()) return cmd_compose(g, compose, args, out);
    if (s->parsed()) return cmd_simulate(g, sim, args, out);
    if (o->parsed()) return cmd_observe(g, obs, args, out);
    if (e->parsed()) return cmd_entropy(g, ent, args, out);
    if (p->parsed()) return cmd_scales(sc, args, out);
    return cmd_verify(g, ver, args, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err, true);
    } catch (const IndeterminateComposition& ex) {
        err << "error: " << ex.what() << '\n';
        return kIndeterminate;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace zitter::cli
