#include "ccr/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ccr/wigner.hpp"

namespace ccr {

namespace {

constexpr double kAngleSlack = 1e-4;
constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::InvalidConfig, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::size_t parse_count(std::string_view text) {
    text = trim(text);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::InvalidConfig, "not a count: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw Error(ErrorKind::InvalidConfig, "not a boolean: '" + std::string(text) + "'");
}

SubsystemRef parse_subsystem(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw Error(ErrorKind::InvalidConfig, "subsystem must be particle:dof, got '" + std::string(text) + "'");
    SubsystemRef ref{parse_count(parts[0]), Dof::momentum};
    if (parts[1] == "spin") {
        ref.dof = Dof::spin;
    } else if (parts[1] != "momentum") {
        throw Error(ErrorKind::InvalidConfig, "unknown degree of freedom '" + std::string(parts[1]) + "'");
    }
    return ref;
}

std::vector<SubsystemRef> all_subsystems(ScenarioId id) {
    const std::size_t particles = (id == ScenarioId::xi2 || id == ScenarioId::upsilon) ? 2 : 1;
    std::vector<SubsystemRef> out;
    for (std::size_t k = 0; k < particles; ++k) {
        out.push_back({k, Dof::momentum});
        out.push_back({k, Dof::spin});
    }
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : "; ") + item;
    return out;
}

void check_grid(const std::vector<double>& grid, const char* name, std::vector<std::string>& problems) {
    if (grid.empty()) problems.push_back(std::string(name) + " grid is empty");
    for (double v : grid) {
        if (!std::isfinite(v) || v < 0.0 || v > kHalfPi + kAngleSlack) {
            problems.push_back(std::string(name) + " value " + format_number(v) + " outside [0, pi/2]");
        }
    }
}

}  // namespace

std::vector<std::string> validate(const SweepConfig& config) {
    std::vector<std::string> problems;
    check_grid(config.theta_values, "theta", problems);
    check_grid(config.phi_values, "phi", problems);
    if (!(config.p_mag > 0.0) || !std::isfinite(config.p_mag)) problems.push_back("p_mag must be positive");
    if (!(config.mass > 0.0) || !std::isfinite(config.mass)) problems.push_back("mass must be positive");
    const auto valid = all_subsystems(config.scenario);
    for (const auto& ref : config.subsystems) {
        if (std::find(valid.begin(), valid.end(), ref) == valid.end()) {
            problems.push_back("scenario " + std::string(to_string(config.scenario)) + " has no particle " +
                               std::to_string(ref.particle));
        }
    }
    if (config.output_path.empty()) problems.push_back("output path is empty");
    return problems;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    if (const auto problems = validate(config); !problems.empty()) {
        throw Error(ErrorKind::InvalidConfig, join(problems));
    }
    auto thetas = config.theta_values;
    auto phis = config.phi_values;
    std::sort(thetas.begin(), thetas.end());
    std::sort(phis.begin(), phis.end());
    auto subsystems = config.subsystems.empty() ? all_subsystems(config.scenario) : config.subsystems;
    std::sort(subsystems.begin(), subsystems.end(), [](const SubsystemRef& a, const SubsystemRef& b) {
        return subsystem_index(a.particle, a.dof, SIZE_MAX) < subsystem_index(b.particle, b.dof, SIZE_MAX);
    });

    const MultipartiteState initial = make_scenario(config.scenario, config.p_mag, config.mass);
    std::vector<SweepRecord> records;
    records.reserve(thetas.size() * phis.size() * subsystems.size());
    for (double theta : thetas) {
        const Vec3 direction = boost_direction(theta);
        for (double phi : phis) {
            const auto boosted = apply_boost(initial, WignerAngleBoost{direction, phi});
            const DensityMatrix global = outer(boosted.amplitudes());
            for (const auto& ref : subsystems) {
                const auto t = ccr(global, boosted.subsystem_index(ref.particle, ref.dof));
                const double sum = t.predictability + t.coherence + t.entropy;
                records.push_back({config.scenario, theta, phi, ref.particle, ref.dof, t.predictability,
                                   t.coherence, t.entropy, sum, std::abs(sum - t.bound())});
            }
        }
    }
    return records;
}

double max_residual(std::span<const SweepRecord> records) {
    double worst = 0.0;
    for (const auto& r : records) worst = std::max(worst, r.residual);
    return worst;
}

std::string format_number(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 12);
    if (ec != std::errc()) return "nan";
    return std::string(buffer, ptr);
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.scenario) << ',' << format_number(r.theta) << ',' << format_number(r.phi) << ','
            << r.particle << ',' << to_string(r.dof) << ',' << format_number(r.predictability) << ','
            << format_number(r.coherence) << ',' << format_number(r.entropy) << ',' << format_number(r.sum) << ','
            << format_number(r.residual) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Config text

ConfigMap parse_config_text(std::istream& in) {
    ConfigMap entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(view.substr(0, eq)));
        if (key.empty()) throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": empty key");
        if (entries.contains(key)) {
            throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        entries[key] = std::string(trim(view.substr(eq + 1)));
    }
    return entries;
}

double parse_angle(std::string_view text) {
    text = trim(text);
    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) return parse_number(text);

    std::string_view coeff = trim(text.substr(0, pi_pos));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    double value = std::numbers::pi * (coeff.empty() ? 1.0 : parse_number(coeff));
    std::string_view rest = trim(text.substr(pi_pos + 2));
    if (!rest.empty()) {
        if (rest.front() != '/') throw Error(ErrorKind::InvalidConfig, "bad angle '" + std::string(text) + "'");
        const double denominator = parse_number(rest.substr(1));
        if (denominator == 0.0) throw Error(ErrorKind::InvalidConfig, "division by zero in '" + std::string(text) + "'");
        value /= denominator;
    }
    return value;
}

std::vector<double> parse_angle_grid(std::string_view text) {
    text = trim(text);
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw Error(ErrorKind::InvalidConfig, "grid must be start:stop:count");
        const double start = parse_angle(parts[0]);
        const double stop = parse_angle(parts[1]);
        const std::size_t count = parse_count(parts[2]);
        if (count == 0) throw Error(ErrorKind::InvalidConfig, "grid count must be positive");
        if (count == 1) return {start};
        std::vector<double> grid(count);
        for (std::size_t i = 0; i < count; ++i) {
            grid[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
        }
        grid.back() = stop;
        return grid;
    }
    std::vector<double> grid;
    for (auto item : split(text, ',')) grid.push_back(parse_angle(item));
    return grid;
}

SweepConfig build_sweep_config(const ConfigMap& entries) {
    SweepConfig config;
    config.theta_values = default_theta_grid();
    config.phi_values = default_phi_grid();
    std::vector<std::string> problems;
    bool degrees = false;

    auto attempt = [&](const char* key, auto&& action) {
        const auto it = entries.find(key);
        if (it == entries.end()) return false;
        try {
            action(it->second);
        } catch (const Error& e) {
            problems.push_back(std::string(key) + ": " + e.what());
        }
        return true;
    };

    attempt("degrees", [&](const std::string& v) { degrees = parse_bool(v); });
    attempt("scenario", [&](const std::string& v) {
        const auto id = parse_scenario(trim(v));
        if (!id) throw Error(ErrorKind::InvalidConfig, "unknown scenario '" + v + "'");
        config.scenario = *id;
    });
    const bool theta_given = attempt("theta", [&](const std::string& v) { config.theta_values = parse_angle_grid(v); });
    const bool phi_given = attempt("phi", [&](const std::string& v) { config.phi_values = parse_angle_grid(v); });
    attempt("subsystems", [&](const std::string& v) {
        config.subsystems.clear();
        if (trim(v) == "all") return;
        for (auto item : split(v, ',')) config.subsystems.push_back(parse_subsystem(item));
    });
    attempt("p_mag", [&](const std::string& v) { config.p_mag = parse_number(v); });
    attempt("mass", [&](const std::string& v) { config.mass = parse_number(v); });
    attempt("out", [&](const std::string& v) { config.output_path = v; });

    static constexpr std::string_view known[] = {"scenario", "theta", "phi", "subsystems",
                                                 "p_mag",    "mass",  "out", "degrees"};
    for (const auto& [key, value] : entries) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            problems.push_back("unknown key '" + key + "'");
        }
    }

    if (degrees) {
        const double to_rad = std::numbers::pi / 180.0;
        if (theta_given) for (auto& v : config.theta_values) v *= to_rad;
        if (phi_given) for (auto& v : config.phi_values) v *= to_rad;
    }
    for (auto& p : validate(config)) problems.push_back(std::move(p));
    if (!problems.empty()) throw Error(ErrorKind::InvalidConfig, join(problems));
    return config;
}

std::vector<double> default_theta_grid() {
    return {0.0, std::numbers::pi / 8.0, std::numbers::pi / 4.0, 3.0 * std::numbers::pi / 8.0, kHalfPi};
}

std::vector<double> default_phi_grid() { return parse_angle_grid("0:pi/2:65"); }

}  // namespace ccr
