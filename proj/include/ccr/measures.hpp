// Complementarity measures of a single subsystem, evaluated in the
// computational basis (momentum tokens, spin-z) in which states are stored.

#pragma once

#include <cstddef>

#include "ccr/multipartite.hpp"
#include "ccr/tensor.hpp"

namespace ccr {

/// (P_l, C_hs, S_l) of one subsystem. For a globally pure state the three
/// sum to (d - 1)/d; `residual` is the measured deviation from that value.
struct ComplementarityTriple {
    double predictability = 0.0;
    double coherence = 0.0;
    double entropy = 0.0;
    std::size_t dimension = 0;
    double residual = 0.0;

    double sum() const noexcept { return predictability + coherence + entropy; }
    double bound() const noexcept { return (static_cast<double>(dimension) - 1.0) / static_cast<double>(dimension); }
};

/// sum_{i != j} |rho_ij|^2
double coherence_hs(const DensityMatrix& rho);

/// sum_i rho_ii^2 - 1/d
double predictability_l(const DensityMatrix& rho);

/// 1 - Tr rho^2
double linear_entropy(const DensityMatrix& rho);

/// Linear entropy of factor `subsystem` evaluated directly on the global
/// density matrix of a pure state, without forming the reduced matrix:
///   sum_{i1 != j1} sum_{I != J} ( |rho_{i1 I, j1 J}|^2 - rho_{i1 I, j1 I} conj(rho_{i1 J, j1 J}) )
/// where I, J run over index tuples of the remaining factors.
double linear_entropy_multiindex(const StateVector& psi, std::size_t subsystem);
double linear_entropy_multiindex(const MultipartiteState& state, std::size_t subsystem);

/// Triple of an already reduced density matrix.
ComplementarityTriple complementarity(const DensityMatrix& reduced);

/// Triple of factor `subsystem` of a global state. Throws GlobalStateNotPure
/// when Tr rho^2 differs from 1 by more than 1e-10.
ComplementarityTriple ccr(const DensityMatrix& global, std::size_t subsystem);
ComplementarityTriple ccr(const MultipartiteState& state, std::size_t subsystem);

/// sqrt(2 S_l) of a subsystem of a pure state. Throws GlobalStateNotPure.
double concurrence_pure(const DensityMatrix& global, std::size_t subsystem);
double concurrence_pure(const MultipartiteState& state, std::size_t subsystem);

/// sqrt(2 C_hs) of a two-qubit X-shaped state (nonzero entries only on the
/// diagonal and anti-diagonal). Throws DimensionMismatch unless rho is 4x4
/// over two 2-dimensional factors, NotXShaped if any other entry exceeds 1e-10.
double concurrence_momentum_x(const DensityMatrix& rho);

/// Joint reduced state of all momentum factors, in particle order.
DensityMatrix momentum_reduction(const MultipartiteState& state);

}  // namespace ccr
