#include "ccr/multipartite.hpp"

#include <string>

namespace ccr {

std::string_view to_string(Dof dof) noexcept {
    return dof == Dof::momentum ? "momentum" : "spin";
}

std::size_t subsystem_index(std::size_t particle, Dof dof, std::size_t particle_count) {
    if (particle >= particle_count) {
        throw Error(ErrorKind::BadSubsystemIndex,
                    "particle " + std::to_string(particle) + " of " + std::to_string(particle_count));
    }
    return 2 * particle + (dof == Dof::spin ? 1 : 0);
}

MultipartiteState::MultipartiteState(std::vector<Particle> particles, StateVector amplitudes)
    : particles_(std::move(particles)), amplitudes_(std::move(amplitudes)) {
    if (particles_.empty()) throw Error(ErrorKind::DimensionMismatch, "state needs at least one particle");

    std::vector<std::size_t> expected;
    for (std::size_t k = 0; k < particles_.size(); ++k) {
        const auto& modes = particles_[k].modes;
        if (modes.empty()) throw Error(ErrorKind::DimensionMismatch, "particle without momentum modes");
        for (std::size_t i = 0; i < modes.size(); ++i)
            for (std::size_t j = i + 1; j < modes.size(); ++j) {
                if (modes[i].token == modes[j].token) {
                    throw Error(ErrorKind::LabelCollision, "particle " + std::to_string(k) + " repeats token '" +
                                                              modes[i].token + "'");
                }
                if (separation(modes[i].momentum, modes[j].momentum) <= kLabelSeparation) {
                    throw Error(ErrorKind::LabelCollision, "particle " + std::to_string(k) + " modes '" +
                                                              modes[i].token + "' and '" + modes[j].token +
                                                              "' carry the same 4-momentum");
                }
            }
        expected.push_back(modes.size());
        expected.push_back(kSpinDimension);
    }
    if (expected != amplitudes_.dims()) {
        throw Error(ErrorKind::DimensionMismatch, "amplitude factors do not match the particle list");
    }
}

std::string MultipartiteState::basis_label(std::size_t factor, std::size_t index) const {
    if (factor >= factor_count()) throw Error(ErrorKind::BadSubsystemIndex, "factor out of range");
    if (factor % 2 == 1) return std::to_string(index);
    return particles_[factor / 2].modes.at(index).token;
}

}  // namespace ccr
