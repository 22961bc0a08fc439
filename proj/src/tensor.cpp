#include "ccr/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace ccr {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::BadSubsystemIndex: return "BadSubsystemIndex";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NormNotPreserved: return "NormNotPreserved";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::VelocityOutOfRange: return "VelocityOutOfRange";
        case ErrorKind::InvalidMomentum: return "InvalidMomentum";
        case ErrorKind::InvalidBoost: return "InvalidBoost";
        case ErrorKind::LabelCollision: return "LabelCollision";
        case ErrorKind::NonPerpendicularGeometry: return "NonPerpendicularGeometry";
        case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
        case ErrorKind::BadPhysicalParams: return "BadPhysicalParams";
        case ErrorKind::GlobalStateNotPure: return "GlobalStateNotPure";
        case ErrorKind::NotXShaped: return "NotXShaped";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

namespace {

bool all_finite(std::span<const Complex> values) {
    return std::all_of(values.begin(), values.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": shapes differ");
    }
}

// Mixed-radix decomposition of a flat index, most significant factor first.
void unflatten(std::size_t flat, std::span<const std::size_t> dims, std::span<std::size_t> digits) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = flat % dims[k];
        flat /= dims[k];
    }
}

std::size_t flatten(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
    return flat;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
    }
    if (!all_finite(entries_)) throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite(entries_)) throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matmul: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex s = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += s * b(k, c);
        }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = scale * a(r, c);
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "trace of non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double hermiticity_error(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "hermiticity of non-square matrix");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r; c < a.cols(); ++c)
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    return worst;
}

double unitarity_error(const ComplexMatrix& a) {
    return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.cols()));
}

Complex det2(const ComplexMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "det2 needs a 2x2 matrix");
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

std::size_t total_dimension(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// StateVector

namespace {

double two_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const auto& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

void check_layout(const std::vector<std::size_t>& dims, std::size_t amplitude_count) {
    if (dims.empty()) throw Error(ErrorKind::DimensionMismatch, "state needs at least one factor");
    if (std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) {
        throw Error(ErrorKind::DimensionMismatch, "factor dimensions must be positive");
    }
    if (total_dimension(dims) != amplitude_count) {
        throw Error(ErrorKind::DimensionMismatch, "amplitude count does not match product of dims");
    }
}

}  // namespace

StateVector::StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    check_layout(dims_, amplitudes_.size());
    if (!all_finite(amplitudes_)) throw Error(ErrorKind::NonFinite, "amplitudes must be finite");
    const double n = norm();
    if (std::abs(n - 1.0) > kStateTolerance) {
        throw Error(ErrorKind::NotNormalized, "state norm is " + std::to_string(n));
    }
}

StateVector StateVector::normalized(std::vector<std::size_t> dims, std::vector<Complex> amplitudes) {
    check_layout(dims, amplitudes.size());
    if (!all_finite(amplitudes)) throw Error(ErrorKind::NonFinite, "amplitudes must be finite");
    const double n = two_norm(amplitudes);
    if (n == 0.0) throw Error(ErrorKind::NotNormalized, "cannot normalize the zero vector");
    StateVector psi;
    psi.dims_ = std::move(dims);
    psi.amplitudes_ = std::move(amplitudes);
    for (auto& z : psi.amplitudes_) z /= n;
    return psi;
}

double StateVector::norm() const noexcept { return two_norm(amplitudes_); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    check_layout(dims_, matrix_.rows());
    if (!matrix_.is_square()) throw Error(ErrorKind::DimensionMismatch, "density matrix must be square");
    if (hermiticity_error(matrix_) > kMatrixTolerance) {
        throw Error(ErrorKind::NotHermitian, "density matrix is not Hermitian");
    }
    const Complex tr = trace(matrix_);
    if (std::abs(tr - 1.0) > kMatrixTolerance) {
        throw Error(ErrorKind::NotNormalized, "density matrix trace is " + std::to_string(tr.real()));
    }
    const double p = purity(*this);
    const double floor = 1.0 / static_cast<double>(matrix_.rows());
    if (p < floor - kStateTolerance || p > 1.0 + kStateTolerance) {
        throw Error(ErrorKind::NotNormalized, "purity " + std::to_string(p) + " outside [1/d, 1]");
    }
}

DensityMatrix outer(const StateVector& psi) {
    const std::size_t n = psi.dimension();
    ComplexMatrix rho(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
    return DensityMatrix(psi.dims(), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    const auto& dims = rho.dims();
    const std::size_t n = dims.size();
    if (keep.empty()) throw Error(ErrorKind::BadSubsystemIndex, "keep set is empty");

    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) throw Error(ErrorKind::BadSubsystemIndex, "subsystem " + std::to_string(k) + " out of range");
        if (kept[k]) throw Error(ErrorKind::BadSubsystemIndex, "subsystem " + std::to_string(k) + " repeated");
        kept[k] = true;
    }

    std::vector<std::size_t> kept_axes, traced_axes;
    for (std::size_t k = 0; k < n; ++k) (kept[k] ? kept_axes : traced_axes).push_back(k);
    if (traced_axes.empty()) return rho;

    std::vector<std::size_t> kept_dims, traced_dims;
    for (auto k : kept_axes) kept_dims.push_back(dims[k]);
    for (auto k : traced_axes) traced_dims.push_back(dims[k]);
    const std::size_t kept_size = total_dimension(kept_dims);
    const std::size_t traced_size = total_dimension(traced_dims);

    // out[(i_K), (j_K)] = sum_{t} rho[(i_K, t), (j_K, t)]
    std::vector<std::size_t> row_digits(kept_axes.size()), col_digits(kept_axes.size());
    std::vector<std::size_t> traced_digits(traced_axes.size());
    std::vector<std::size_t> full_row(n), full_col(n);
    ComplexMatrix out(kept_size, kept_size);
    for (std::size_t i = 0; i < kept_size; ++i) {
        unflatten(i, kept_dims, row_digits);
        for (std::size_t j = 0; j < kept_size; ++j) {
            unflatten(j, kept_dims, col_digits);
            Complex acc = 0.0;
            for (std::size_t t = 0; t < traced_size; ++t) {
                unflatten(t, traced_dims, traced_digits);
                for (std::size_t a = 0; a < kept_axes.size(); ++a) {
                    full_row[kept_axes[a]] = row_digits[a];
                    full_col[kept_axes[a]] = col_digits[a];
                }
                for (std::size_t a = 0; a < traced_axes.size(); ++a) {
                    full_row[traced_axes[a]] = traced_digits[a];
                    full_col[traced_axes[a]] = traced_digits[a];
                }
                acc += rho(flatten(full_row, dims), flatten(full_col, dims));
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(kept_dims), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

double purity(const DensityMatrix& rho) {
    // Tr rho^2 = sum_ij |rho_ij|^2 for Hermitian rho
    double sum = 0.0;
    for (const auto& z : rho.matrix().entries()) sum += std::norm(z);
    return sum;
}

StateVector apply(const ComplexMatrix& op, const StateVector& psi) {
    if (op.cols() != psi.dimension() || op.rows() != psi.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "operator does not act on the state space");
    }
    std::vector<Complex> out(psi.dimension());
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c) out[r] += op(r, c) * psi[c];
    const double n = two_norm(out);
    if (std::abs(n - 1.0) > kStateTolerance) {
        throw Error(ErrorKind::NormNotPreserved, "output norm is " + std::to_string(n));
    }
    return StateVector(psi.dims(), std::move(out));
}

StateVector apply_controlled(const StateVector& psi, std::size_t control, std::size_t control_value,
                             std::size_t target, const ComplexMatrix& op) {
    const auto& dims = psi.dims();
    if (control >= dims.size() || target >= dims.size() || control == target) {
        throw Error(ErrorKind::BadSubsystemIndex, "invalid control/target factors");
    }
    if (control_value >= dims[control]) {
        throw Error(ErrorKind::BadSubsystemIndex, "control value out of range");
    }
    if (op.rows() != dims[target] || op.cols() != dims[target]) {
        throw Error(ErrorKind::DimensionMismatch, "operator does not match target factor");
    }

    std::vector<Complex> out(psi.amplitudes().begin(), psi.amplitudes().end());
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t flat = 0; flat < psi.dimension(); ++flat) {
        unflatten(flat, dims, digits);
        if (digits[control] != control_value) continue;
        const std::size_t row = digits[target];
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dims[target]; ++c) {
            digits[target] = c;
            acc += op(row, c) * psi[flatten(digits, dims)];
        }
        out[flat] = acc;
    }
    const double n = two_norm(out);
    if (std::abs(n - 1.0) > kStateTolerance) {
        throw Error(ErrorKind::NormNotPreserved, "output norm is " + std::to_string(n));
    }
    return StateVector(dims, std::move(out));
}

}  // namespace ccr
