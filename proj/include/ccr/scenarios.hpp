// Canonical single- and two-particle states with momenta along +-y.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ccr/multipartite.hpp"

namespace ccr {

enum class ScenarioId { psi, xi, phi, xi2, upsilon };

inline constexpr std::array<ScenarioId, 5> kAllScenarios{ScenarioId::psi, ScenarioId::xi, ScenarioId::phi,
                                                         ScenarioId::xi2, ScenarioId::upsilon};

std::string_view to_string(ScenarioId id) noexcept;
std::optional<ScenarioId> parse_scenario(std::string_view name);

/// (cos theta, 0, sin theta). Throws ThetaOutOfRange outside [0, pi/2]; input
/// may overshoot pi/2 by 1e-4 so four-decimal angles such as 1.5708 pass.
Vec3 boost_direction(double theta);

inline constexpr double kDefaultMomentum = 1.0;
inline constexpr double kDefaultMass = 1.0;

/// Modes of each particle are ordered (+p y, -p y) with tokens "+p", "-p".
///   psi     = (|p> + |-p>) |0> / sqrt2
///   xi      = (|p,0> + |-p,1>) / sqrt2
///   phi     = (|p> + |-p>)(|0> + |1>) / 2
///   xi2     = (|p,-p> + |-p,p>) |0,0> / sqrt2
///   upsilon = (|p,-p>|0,1> + |-p,p>|1,0>) / sqrt2
/// Two-particle states are stored in the (p_A, s_A, p_B, s_B) order.
/// Throws BadPhysicalParams unless p_mag > 0 and mass > 0.
MultipartiteState make_scenario(ScenarioId id, double p_mag = kDefaultMomentum, double mass = kDefaultMass);

/// One particle of a product state.
struct ParticleSpec {
    std::vector<MomentumMode> modes;
    std::vector<Complex> momentum_amplitudes;
    std::array<Complex, 2> spin;
};

/// Tensor product of each particle's momentum and spin amplitudes. Throws
/// NotNormalized if any amplitude list is off unit norm by more than 1e-10.
MultipartiteState make_product_state(std::span<const ParticleSpec> particles);

}  // namespace ccr
