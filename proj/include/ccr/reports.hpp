#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "ccr/measures.hpp"
#include "ccr/scenarios.hpp"
#include "ccr/wigner.hpp"

namespace ccr {

struct SubsystemComparison {
    std::size_t particle;
    Dof dof;
    ComplementarityTriple before;
    ComplementarityTriple after;
};

/// Aspects of the joint momentum state of a two-particle scenario.
struct MomentumPairAspects {
    double coherence;
    double entropy;
    std::optional<double> concurrence;  // set when the reduction is X-shaped
};

struct ScenarioReport {
    ScenarioId id;
    double theta;
    double phi;
    MultipartiteState initial;
    MultipartiteState boosted;
    std::vector<SubsystemComparison> subsystems;
    std::optional<MomentumPairAspects> momenta_before;
    std::optional<MomentumPairAspects> momenta_after;
};

ScenarioReport evaluate_scenario(ScenarioId id, double theta, double phi, double p_mag = kDefaultMomentum,
                                 double mass = kDefaultMass);

void print_report(std::ostream& out, const ScenarioReport& report);

/// Nonzero amplitudes with their basis labels, one per line.
void print_amplitudes(std::ostream& out, const MultipartiteState& state);

struct WignerReport {
    double omega;
    double alpha;
    double e_dot_p;
    double phi_half_angle;  // from the cos(phi/2), sin(phi/2) n pair
    double phi_tan;         // tan-formula angle, meaningful for e perpendicular to p
    double phi_oracle;      // extracted from L^{-1}(Lambda p) Lambda L(p)
    double oracle_fix_error;
    WignerRotation rotation;
};

WignerReport evaluate_wigner(const BoostSpec& boost, const FourMomentum& p);

void print_report(std::ostream& out, const WignerReport& report);

}  // namespace ccr
