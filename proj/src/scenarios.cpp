#include "ccr/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ccr {

namespace {

constexpr double kThetaSlack = 1e-4;

std::vector<Particle> opposing_pair(std::size_t particle_count, double p_mag, double mass) {
    const Particle particle{{{"+p", FourMomentum::from_mass(mass, p_mag * kUnitY)},
                             {"-p", FourMomentum::from_mass(mass, -p_mag * kUnitY)}}};
    return std::vector<Particle>(particle_count, particle);
}

// Amplitude vector from (index tuple, amplitude) pairs over the given dims.
std::vector<Complex> amplitudes_from(std::span<const std::size_t> dims,
                                     std::initializer_list<std::pair<std::vector<std::size_t>, Complex>> terms) {
    std::vector<Complex> out(total_dimension(dims));
    for (const auto& [digits, amplitude] : terms) {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
        out[flat] += amplitude;
    }
    return out;
}

double norm_of(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

std::string_view to_string(ScenarioId id) noexcept {
    switch (id) {
        case ScenarioId::psi: return "psi";
        case ScenarioId::xi: return "xi";
        case ScenarioId::phi: return "phi";
        case ScenarioId::xi2: return "xi2";
        case ScenarioId::upsilon: return "upsilon";
    }
    return "unknown";
}

std::optional<ScenarioId> parse_scenario(std::string_view name) {
    for (auto id : kAllScenarios)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

Vec3 boost_direction(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2.0 + kThetaSlack) {
        throw Error(ErrorKind::ThetaOutOfRange, "theta must lie in [0, pi/2], got " + std::to_string(theta));
    }
    return {std::cos(theta), 0.0, std::sin(theta)};
}

MultipartiteState make_scenario(ScenarioId id, double p_mag, double mass) {
    if (!std::isfinite(p_mag) || !std::isfinite(mass) || p_mag <= 0.0 || mass <= 0.0) {
        throw Error(ErrorKind::BadPhysicalParams, "momentum magnitude and mass must be positive");
    }
    const double r2 = 1.0 / std::numbers::sqrt2;
    constexpr std::size_t P = 0, M = 1;  // +p, -p mode indices

    if (id == ScenarioId::psi || id == ScenarioId::xi || id == ScenarioId::phi) {
        const std::vector<std::size_t> dims{2, 2};
        std::vector<Complex> amps;
        switch (id) {
            case ScenarioId::psi: amps = amplitudes_from(dims, {{{P, 0}, r2}, {{M, 0}, r2}}); break;
            case ScenarioId::xi: amps = amplitudes_from(dims, {{{P, 0}, r2}, {{M, 1}, r2}}); break;
            default:
                amps = amplitudes_from(dims, {{{P, 0}, 0.5}, {{P, 1}, 0.5}, {{M, 0}, 0.5}, {{M, 1}, 0.5}});
                break;
        }
        return MultipartiteState(opposing_pair(1, p_mag, mass), StateVector(dims, std::move(amps)));
    }

    const std::vector<std::size_t> dims{2, 2, 2, 2};
    std::vector<Complex> amps;
    if (id == ScenarioId::xi2) {
        amps = amplitudes_from(dims, {{{P, 0, M, 0}, r2}, {{M, 0, P, 0}, r2}});
    } else {
        amps = amplitudes_from(dims, {{{P, 0, M, 1}, r2}, {{M, 1, P, 0}, r2}});
    }
    return MultipartiteState(opposing_pair(2, p_mag, mass), StateVector(dims, std::move(amps)));
}

MultipartiteState make_product_state(std::span<const ParticleSpec> particles) {
    std::vector<Particle> out_particles;
    std::vector<std::size_t> dims;
    std::vector<Complex> amps{1.0};
    for (std::size_t k = 0; k < particles.size(); ++k) {
        const auto& spec = particles[k];
        if (spec.momentum_amplitudes.size() != spec.modes.size()) {
            throw Error(ErrorKind::DimensionMismatch, "one momentum amplitude per mode is required");
        }
        if (std::abs(norm_of(spec.momentum_amplitudes) - 1.0) > kStateTolerance) {
            throw Error(ErrorKind::NotNormalized, "momentum amplitudes of particle " + std::to_string(k));
        }
        if (std::abs(norm_of(spec.spin) - 1.0) > kStateTolerance) {
            throw Error(ErrorKind::NotNormalized, "spin amplitudes of particle " + std::to_string(k));
        }
        std::vector<Complex> next;
        next.reserve(amps.size() * spec.modes.size() * kSpinDimension);
        for (const auto& a : amps)
            for (const auto& m : spec.momentum_amplitudes)
                for (const auto& s : spec.spin) next.push_back(a * m * s);
        amps = std::move(next);
        dims.push_back(spec.modes.size());
        dims.push_back(kSpinDimension);
        out_particles.push_back(Particle{spec.modes});
    }
    return MultipartiteState(std::move(out_particles), StateVector(std::move(dims), std::move(amps)));
}

}  // namespace ccr
