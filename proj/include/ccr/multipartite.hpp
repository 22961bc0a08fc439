#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccr/lorentz.hpp"
#include "ccr/tensor.hpp"

namespace ccr {

enum class Dof { momentum, spin };

std::string_view to_string(Dof dof) noexcept;

inline constexpr std::size_t kSpinDimension = 2;

/// Discrete momentum basis state: an opaque token paired with its 4-momentum.
struct MomentumMode {
    std::string token;
    FourMomentum momentum;
};

struct Particle {
    std::vector<MomentumMode> modes;
};

/// Global factor index of a particle's degree of freedom in the
/// (p_0, s_0, p_1, s_1, ...) ordering. Throws BadSubsystemIndex when
/// particle >= particle_count.
std::size_t subsystem_index(std::size_t particle, Dof dof, std::size_t particle_count);

/// Pure state of spin-1/2 particles over discrete momentum modes. Factor
/// dimensions are (|modes_0|, 2, |modes_1|, 2, ...).
class MultipartiteState {
public:
    /// Throws LabelCollision if a particle repeats a token or has two 4-momenta
    /// within 1e-9 of each other, DimensionMismatch if the amplitude layout
    /// does not follow the particle list.
    MultipartiteState(std::vector<Particle> particles, StateVector amplitudes);

    const std::vector<Particle>& particles() const noexcept { return particles_; }
    const StateVector& amplitudes() const noexcept { return amplitudes_; }
    std::size_t particle_count() const noexcept { return particles_.size(); }
    std::size_t factor_count() const noexcept { return 2 * particles_.size(); }

    std::size_t subsystem_index(std::size_t particle, Dof dof) const {
        return ccr::subsystem_index(particle, dof, particles_.size());
    }

    /// Human-readable label of a factor's basis state, e.g. "+p" or "1".
    std::string basis_label(std::size_t factor, std::size_t index) const;

private:
    std::vector<Particle> particles_;
    StateVector amplitudes_;
};

/// Minimum max-norm distance between two momenta of one particle.
inline constexpr double kLabelSeparation = 1e-9;

}  // namespace ccr
