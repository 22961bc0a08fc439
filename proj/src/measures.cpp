#include "ccr/measures.hpp"

#include <cmath>
#include <string>

namespace ccr {

namespace {

constexpr double kPurityTolerance = 1e-10;
constexpr double kXShapeTolerance = 1e-10;

void require_pure(const DensityMatrix& global) {
    const double p = purity(global);
    if (std::abs(p - 1.0) > kPurityTolerance) {
        throw Error(ErrorKind::GlobalStateNotPure, "global purity is " + std::to_string(p));
    }
}

// Flat global index of (i_k = local, rest = remaining factors in order).
class FactorSplit {
public:
    FactorSplit(const std::vector<std::size_t>& dims, std::size_t factor) : dims_(dims), factor_(factor) {
        if (factor >= dims.size()) {
            throw Error(ErrorKind::BadSubsystemIndex, "subsystem " + std::to_string(factor) + " out of range");
        }
        rest_size_ = total_dimension(dims) / dims[factor];
    }

    std::size_t local_size() const { return dims_[factor_]; }
    std::size_t rest_size() const { return rest_size_; }

    std::size_t global(std::size_t local, std::size_t rest) const {
        std::size_t flat = 0;
        std::size_t rest_stride = rest_size_;
        for (std::size_t k = 0; k < dims_.size(); ++k) {
            std::size_t digit;
            if (k == factor_) {
                digit = local;
            } else {
                rest_stride /= dims_[k];
                digit = (rest / rest_stride) % dims_[k];
            }
            flat = flat * dims_[k] + digit;
        }
        return flat;
    }

private:
    const std::vector<std::size_t>& dims_;
    std::size_t factor_;
    std::size_t rest_size_ = 1;
};

}  // namespace

double coherence_hs(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i)
        for (std::size_t j = 0; j < rho.dimension(); ++j)
            if (i != j) sum += std::norm(rho(i, j));
    return sum;
}

double predictability_l(const DensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.dimension(); ++i) sum += rho(i, i).real() * rho(i, i).real();
    return sum - 1.0 / static_cast<double>(rho.dimension());
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double linear_entropy_multiindex(const StateVector& psi, std::size_t subsystem) {
    const DensityMatrix rho = outer(psi);
    const FactorSplit split(psi.dims(), subsystem);
    Complex sum = 0.0;
    for (std::size_t i1 = 0; i1 < split.local_size(); ++i1)
        for (std::size_t j1 = 0; j1 < split.local_size(); ++j1) {
            if (i1 == j1) continue;
            for (std::size_t r = 0; r < split.rest_size(); ++r)
                for (std::size_t s = 0; s < split.rest_size(); ++s) {
                    if (r == s) continue;
                    const Complex cross = rho(split.global(i1, r), split.global(j1, s));
                    const Complex left = rho(split.global(i1, r), split.global(j1, r));
                    const Complex right = rho(split.global(i1, s), split.global(j1, s));
                    sum += std::norm(cross) - left * std::conj(right);
                }
        }
    return sum.real();
}

double linear_entropy_multiindex(const MultipartiteState& state, std::size_t subsystem) {
    return linear_entropy_multiindex(state.amplitudes(), subsystem);
}

ComplementarityTriple complementarity(const DensityMatrix& reduced) {
    ComplementarityTriple t;
    t.predictability = predictability_l(reduced);
    t.coherence = coherence_hs(reduced);
    t.entropy = linear_entropy(reduced);
    t.dimension = reduced.dimension();
    t.residual = std::abs(t.sum() - t.bound());
    return t;
}

ComplementarityTriple ccr(const DensityMatrix& global, std::size_t subsystem) {
    require_pure(global);
    return complementarity(partial_trace(global, {subsystem}));
}

ComplementarityTriple ccr(const MultipartiteState& state, std::size_t subsystem) {
    return ccr(outer(state.amplitudes()), subsystem);
}

double concurrence_pure(const DensityMatrix& global, std::size_t subsystem) {
    require_pure(global);
    const double s = linear_entropy(partial_trace(global, {subsystem}));
    return std::sqrt(2.0 * std::max(s, 0.0));
}

double concurrence_pure(const MultipartiteState& state, std::size_t subsystem) {
    return concurrence_pure(outer(state.amplitudes()), subsystem);
}

double concurrence_momentum_x(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw Error(ErrorKind::DimensionMismatch, "X-state concurrence needs a two-qubit density matrix");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j || i + j == 3) continue;
            if (std::abs(rho(i, j)) > kXShapeTolerance) {
                throw Error(ErrorKind::NotXShaped, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                       ") lies outside the X pattern");
            }
        }
    return std::sqrt(2.0 * coherence_hs(rho));
}

DensityMatrix momentum_reduction(const MultipartiteState& state) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < state.particle_count(); ++k) keep.push_back(state.subsystem_index(k, Dof::momentum));
    return partial_trace(outer(state.amplitudes()), keep);
}

}  // namespace ccr
