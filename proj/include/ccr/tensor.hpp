// Dense complex linear algebra for small tensor-product Hilbert spaces.
//
// Matrices are stored row-major. Subsystem factors of a composite space are
// ordered most-significant first, so the flat index of (i_0, ..., i_{n-1})
// over dims (d_0, ..., d_{n-1}) is ((i_0 d_1 + i_1) d_2 + ...) + i_{n-1}.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ccr/error.hpp"

namespace ccr {

using Complex = std::complex<double>;

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kMatrixTolerance = 1e-12;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a_ij - conj(a_ji)|
double hermiticity_error(const ComplexMatrix& a);

/// max |(a^dagger a - I)_ij|
double unitarity_error(const ComplexMatrix& a);

Complex det2(const ComplexMatrix& a);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Product of a dimension list; 1 for an empty list.
std::size_t total_dimension(std::span<const std::size_t> dims);

/// Pure state over an ordered list of subsystem factors.
class StateVector {
public:
    /// Throws NotNormalized unless the 2-norm is 1 within kStateTolerance.
    StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

    /// Rescales to unit norm. Throws NotNormalized for a zero vector.
    static StateVector normalized(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const noexcept;

private:
    StateVector() = default;

    std::vector<std::size_t> dims_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace matrix with subsystem metadata.
class DensityMatrix {
public:
    /// Validates hermiticity and unit trace within kMatrixTolerance and
    /// the purity range [1/d, 1] within kStateTolerance.
    DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix);

    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return matrix_.rows(); }
    const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

private:
    std::vector<std::size_t> dims_;
    ComplexMatrix matrix_;
};

DensityMatrix outer(const StateVector& psi);

/// Reduced state on the `keep` factors, which are returned in their original
/// relative order. Throws BadSubsystemIndex for an empty, duplicated or
/// out-of-range keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Tr rho^2
double purity(const DensityMatrix& rho);

/// Applies a norm-preserving operator over the whole space.
/// Throws DimensionMismatch or NormNotPreserved.
StateVector apply(const ComplexMatrix& op, const StateVector& psi);

/// Applies `op` to factor `target` on the amplitude block where factor
/// `control` has index `control_value`. The remaining blocks are untouched.
StateVector apply_controlled(const StateVector& psi, std::size_t control, std::size_t control_value,
                             std::size_t target, const ComplexMatrix& op);

}  // namespace ccr
