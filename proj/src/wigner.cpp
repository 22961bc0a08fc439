#include "ccr/wigner.hpp"

#include <functional>
#include <numbers>
#include <string>

namespace ccr {

namespace {

constexpr double kPerpendicularTolerance = 1e-12;
constexpr double kAngleSlack = 1e-4;

ComplexMatrix su2(double cos_half, Vec3 sin_half_axis) {
    // cos I + i (s . sigma) with s = sin(phi/2) n
    const Complex i{0.0, 1.0};
    const Vec3& s = sin_half_axis;
    return {{cos_half + i * s.z, i * s.x + s.y}, {i * s.x - s.y, cos_half - i * s.z}};
}

using ModeAction = std::function<std::pair<FourMomentum, WignerRotation>(const FourMomentum&)>;

// The identity boost (zero rapidity or zero Wigner angle) leaves tokens untagged.
MultipartiteState boost_modes(const MultipartiteState& state, const ModeAction& action, bool tag) {
    std::vector<Particle> particles = state.particles();
    StateVector psi = state.amplitudes();
    for (std::size_t k = 0; k < particles.size(); ++k) {
        const std::size_t momentum_factor = state.subsystem_index(k, Dof::momentum);
        const std::size_t spin_factor = state.subsystem_index(k, Dof::spin);
        auto& modes = particles[k].modes;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            auto [boosted, rotation] = action(modes[i].momentum);
            psi = apply_controlled(psi, momentum_factor, i, spin_factor, rotation.matrix);
            modes[i].momentum = boosted;
            if (tag) modes[i].token += kBoostTag;
        }
        for (std::size_t i = 0; i < modes.size(); ++i)
            for (std::size_t j = i + 1; j < modes.size(); ++j)
                if (separation(modes[i].momentum, modes[j].momentum) <= kLabelSeparation) {
                    throw Error(ErrorKind::LabelCollision,
                                "boosted modes '" + modes[i].token + "' and '" + modes[j].token + "' coincide");
                }
    }
    return MultipartiteState(std::move(particles), std::move(psi));
}

}  // namespace

WignerRotation WignerRotation::identity() {
    return WignerRotation{ComplexMatrix::identity(2), 0.0, kUnitZ};
}

WignerRotation WignerRotation::from_angle_axis(double phi, Vec3 axis) {
    if (phi == 0.0) return identity();
    return WignerRotation{su2(std::cos(phi / 2.0), std::sin(phi / 2.0) * axis), phi, axis};
}

WignerRotation wigner_rotation(const BoostSpec& boost, const FourMomentum& p) {
    const double omega = boost.rapidity();
    const double alpha = momentum_rapidity(p);
    if (omega == 0.0 || alpha == 0.0) return WignerRotation::identity();

    const Vec3& e = boost.direction();
    const Vec3 p_hat = p.direction();
    const double c = dot(e, p_hat);
    const double norm_factor =
        std::sqrt(0.5 * (1.0 + std::cosh(omega) * std::cosh(alpha) + std::sinh(omega) * std::sinh(alpha) * c));
    const double shsh = std::sinh(omega / 2.0) * std::sinh(alpha / 2.0);
    const double cos_half = (std::cosh(omega / 2.0) * std::cosh(alpha / 2.0) + shsh * c) / norm_factor;
    const Vec3 sin_half_axis = (shsh / norm_factor) * cross(e, p_hat);

    const double sin_half = norm(sin_half_axis);
    if (sin_half == 0.0) return WignerRotation::identity();
    return WignerRotation{su2(cos_half, sin_half_axis), 2.0 * std::atan2(sin_half, cos_half),
                          (1.0 / sin_half) * sin_half_axis};
}

void validate(const WignerAngleBoost& boost) {
    if (std::abs(norm(boost.direction) - 1.0) > kPerpendicularTolerance) {
        throw Error(ErrorKind::InvalidBoost, "boost direction must be a unit vector");
    }
    if (!std::isfinite(boost.phi) || boost.phi < 0.0 || boost.phi > std::numbers::pi / 2.0 + kAngleSlack) {
        throw Error(ErrorKind::InvalidBoost, "Wigner angle must lie in [0, pi/2], got " + std::to_string(boost.phi));
    }
}

WignerRotation wigner_rotation(const WignerAngleBoost& boost, const FourMomentum& p) {
    validate(boost);
    const Vec3 p_hat = p.direction();
    if (p_hat == Vec3{}) return WignerRotation::identity();
    if (std::abs(dot(boost.direction, p_hat)) > kPerpendicularTolerance) {
        throw Error(ErrorKind::NonPerpendicularGeometry, "Wigner-angle boosts need e perpendicular to p");
    }
    const Vec3 axis = cross(boost.direction, p_hat);
    return WignerRotation::from_angle_axis(boost.phi, (1.0 / norm(axis)) * axis);
}

MultipartiteState apply_boost(const MultipartiteState& state, const BoostSpec& boost) {
    return boost_modes(state, [&](const FourMomentum& p) {
        return std::pair{boost_momentum(boost, p), wigner_rotation(boost, p)};
    }, boost.rapidity() != 0.0);
}

MultipartiteState apply_boost(const MultipartiteState& state, const WignerAngleBoost& boost) {
    validate(boost);
    return boost_modes(state, [&](const FourMomentum& p) { return std::pair{p, wigner_rotation(boost, p)}; },
                       boost.phi != 0.0);
}

}  // namespace ccr
