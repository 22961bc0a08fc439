// ccr: boost discrete-momentum spin-1/2 states and track their complementarity.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "ccr/check.hpp"
#include "ccr/reports.hpp"
#include "ccr/sweep.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double to_radians(const std::string& text, bool degrees) {
    const double value = ccr::parse_angle(text);
    return degrees ? value * std::numbers::pi / 180.0 : value;
}

ccr::Vec3 parse_vector(const std::string& text) {
    std::vector<double> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ccr::Error(ccr::ErrorKind::InvalidConfig, "bad vector component '" + item + "'");
        }
    }
    if (parts.size() != 3) throw ccr::Error(ccr::ErrorKind::InvalidConfig, "vector needs three components: '" + text + "'");
    const ccr::Vec3 v{parts[0], parts[1], parts[2]};
    const double n = ccr::norm(v);
    if (!(n > 0.0)) throw ccr::Error(ccr::ErrorKind::InvalidConfig, "zero vector '" + text + "'");
    return (1.0 / n) * v;
}

struct ScenarioArgs {
    std::string id;
    std::string theta = "0";
    std::string phi = "0";
    double p_mag = ccr::kDefaultMomentum;
    double mass = ccr::kDefaultMass;
    bool degrees = false;
};

int run_scenario(const ScenarioArgs& a) {
    const auto id = ccr::parse_scenario(a.id);
    if (!id) throw ccr::Error(ccr::ErrorKind::InvalidConfig, "unknown scenario '" + a.id + "'");
    const auto report =
        ccr::evaluate_scenario(*id, to_radians(a.theta, a.degrees), to_radians(a.phi, a.degrees), a.p_mag, a.mass);
    ccr::print_report(std::cout, report);
    return 0;
}

struct SweepArgs {
    std::string config_path;
    std::optional<std::string> id, theta, phi, subsystems, out;
    std::optional<double> p_mag, mass;
    bool degrees = false;
};

int run_sweep(const SweepArgs& a) {
    ccr::ConfigMap entries;
    if (!a.config_path.empty()) {
        std::ifstream file(a.config_path);
        if (!file) throw ccr::Error(ccr::ErrorKind::InvalidConfig, "cannot open config '" + a.config_path + "'");
        try {
            entries = ccr::parse_config_text(file);
        } catch (const ccr::Error& e) {
            throw ccr::Error(ccr::ErrorKind::InvalidConfig, a.config_path + ": " + e.what());
        }
    }
    auto set = [&](const char* key, const std::optional<std::string>& v) {
        if (v) entries[key] = *v;
    };
    set("scenario", a.id);
    set("theta", a.theta);
    set("phi", a.phi);
    set("subsystems", a.subsystems);
    set("out", a.out);
    if (a.p_mag) entries["p_mag"] = ccr::format_number(*a.p_mag);
    if (a.mass) entries["mass"] = ccr::format_number(*a.mass);
    if (a.degrees) entries["degrees"] = "true";

    const ccr::SweepConfig config = ccr::build_sweep_config(entries);
    const auto records = ccr::run_sweep(config);

    if (config.output_path == "-") {
        ccr::write_csv(std::cout, records);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("write to stdout failed");
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output '" + config.output_path + "'");
        ccr::write_csv(file, records);
        file.close();
        if (!file) throw std::runtime_error("write failed: '" + config.output_path + "'");
    }
    std::cerr << "rows " << records.size() << ", max residual " << ccr::format_number(ccr::max_residual(records))
              << '\n';
    return 0;
}

struct WignerArgs {
    std::optional<double> velocity, rapidity;
    double p_mag = ccr::kDefaultMomentum;
    double mass = ccr::kDefaultMass;
    std::string e_dir = "1,0,0";
    std::string p_dir = "0,0,1";
};

int run_wigner(const WignerArgs& a) {
    if (a.velocity && a.rapidity)
        throw ccr::Error(ccr::ErrorKind::InvalidConfig, "give --velocity or --rapidity, not both");
    const double omega = a.rapidity ? *a.rapidity : ccr::rapidity_from_velocity(a.velocity.value_or(0.0));
    const ccr::BoostSpec boost(omega, parse_vector(a.e_dir));
    const auto p = ccr::FourMomentum::from_mass(a.mass, a.p_mag * parse_vector(a.p_dir));
    ccr::print_report(std::cout, ccr::evaluate_wigner(boost, p));
    return 0;
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
        seed = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-')
        throw ccr::Error(ccr::ErrorKind::InvalidConfig, "bad seed '" + text + "'");
    return seed;
}

int run_check(const std::optional<std::string>& seed_flag) {
    std::uint64_t seed = ccr::kDefaultSeed;
    if (seed_flag) {
        seed = parse_seed(*seed_flag);
    } else if (const char* env = std::getenv("CCR_SEED"); env && *env) {
        seed = parse_seed(env);
    }
    std::cout << "seed " << seed << '\n';
    const auto results = ccr::run_checks(seed);
    ccr::print_results(std::cout, results);
    if (ccr::all_passed(results)) {
        std::cout << "all suites passed\n";
        return 0;
    }
    for (const auto& r : results)
        if (!r.passed) std::cerr << "failed suite: " << r.name << '\n';
    return kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz boosts of spin-1/2 momentum states and their complementarity relations"};
    app.require_subcommand(1);

    ScenarioArgs scenario;
    auto* sc = app.add_subcommand("scenario", "boost one scenario state and compare P, C, S before and after");
    sc->add_option("--id", scenario.id, "psi | xi | phi | xi2 | upsilon")->required();
    sc->add_option("--theta", scenario.theta, "boost direction angle from x toward z (radians)");
    sc->add_option("--phi", scenario.phi, "Wigner angle (radians)");
    sc->add_option("--p-mag", scenario.p_mag, "momentum magnitude");
    sc->add_option("--mass", scenario.mass, "rest mass");
    sc->add_flag("--degrees", scenario.degrees, "read angles in degrees");

    SweepArgs sweep;
    auto* sw = app.add_subcommand("sweep", "tabulate P, C, S over a (theta, phi) grid as CSV");
    sw->add_option("--config", sweep.config_path, "key = value config file; flags override its entries");
    sw->add_option("--id", sweep.id, "scenario");
    sw->add_option("--theta", sweep.theta, "theta grid: a,b,c or start:stop:count");
    sw->add_option("--phi", sweep.phi, "phi grid: a,b,c or start:stop:count");
    sw->add_option("--subsystems", sweep.subsystems, "particle:dof list, or all");
    sw->add_option("--p-mag", sweep.p_mag, "momentum magnitude");
    sw->add_option("--mass", sweep.mass, "rest mass");
    sw->add_option("--out", sweep.out, "output CSV path, - for stdout");
    sw->add_flag("--degrees", sweep.degrees, "read angles in degrees");

    WignerArgs wigner;
    auto* wg = app.add_subcommand("wigner", "Wigner angle by closed form and by the 4x4 oracle");
    auto* vel = wg->add_option("--velocity", wigner.velocity, "boost speed, |v| < 1");
    wg->add_option("--rapidity", wigner.rapidity, "boost rapidity")->excludes(vel);
    wg->add_option("--p-mag", wigner.p_mag, "momentum magnitude");
    wg->add_option("--mass", wigner.mass, "rest mass");
    wg->add_option("--e-dir", wigner.e_dir, "boost direction x,y,z");
    wg->add_option("--p-dir", wigner.p_dir, "momentum direction x,y,z");

    std::optional<std::string> seed;
    auto* ck = app.add_subcommand("check", "run the invariant battery");
    ck->add_option("--seed", seed, "random seed (also CCR_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sc) return run_scenario(scenario);
        if (*sw) return run_sweep(sweep);
        if (*wg) return run_wigner(wigner);
        if (*ck) return run_check(seed);
    } catch (const std::exception& e) {
        std::cerr << "ccr: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
