// (theta, phi) sweeps over the scenario states and their CSV form.

#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccr/measures.hpp"
#include "ccr/scenarios.hpp"

namespace ccr {

struct SubsystemRef {
    std::size_t particle = 0;
    Dof dof = Dof::momentum;

    friend bool operator==(const SubsystemRef&, const SubsystemRef&) = default;
};

struct SweepConfig {
    ScenarioId scenario = ScenarioId::psi;
    std::vector<double> theta_values;
    std::vector<double> phi_values;
    std::vector<SubsystemRef> subsystems;  // empty selects every single-DOF subsystem
    std::string output_path = "-";         // "-" writes to stdout
    double p_mag = kDefaultMomentum;
    double mass = kDefaultMass;
};

/// Every violation of the config invariants; empty when valid.
std::vector<std::string> validate(const SweepConfig& config);

struct SweepRecord {
    ScenarioId scenario;
    double theta;
    double phi;
    std::size_t particle;
    Dof dof;
    double predictability;
    double coherence;
    double entropy;
    double sum;       // P + C + S in that order
    double residual;  // |sum - (d-1)/d|
};

/// Rows ordered by theta ascending, then phi ascending, then subsystem index.
/// Throws InvalidConfig listing every violation.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

double max_residual(std::span<const SweepRecord> records);

inline constexpr std::string_view kCsvHeader = "scenario,theta,phi,particle,dof,P,C,S,sum,residual";

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

void write_csv(std::ostream& out, std::span<const SweepRecord> records);

// ---------------------------------------------------------------------------
// Config text: one `key = value` per line, '#' starts a comment. Lists are
// comma separated; an angle grid may also be written `start:stop:count`.

using ConfigMap = std::map<std::string, std::string>;

/// Throws InvalidConfig naming the offending line.
ConfigMap parse_config_text(std::istream& in);

/// Angles accept plain numbers and multiples of pi: "pi", "pi/2", "3pi/8", "3*pi/8".
double parse_angle(std::string_view text);
std::vector<double> parse_angle_grid(std::string_view text);

/// Recognised keys: scenario, theta, phi, subsystems, p_mag, mass, out, degrees.
/// Subsystems are written `particle:dof`, e.g. "0:spin, 1:momentum".
/// Throws InvalidConfig listing every problem found.
SweepConfig build_sweep_config(const ConfigMap& entries);

/// The default grids: theta in {0, pi/8, pi/4, 3pi/8, pi/2}, 65 phi points over [0, pi/2].
std::vector<double> default_theta_grid();
std::vector<double> default_phi_grid();

}  // namespace ccr
