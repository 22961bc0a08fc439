// Four-vector and pure-boost algebra.
//
// Natural units, metric eta = diag(-1, 1, 1, 1), component order (t, x, y, z).

#pragma once

#include <array>
#include <cmath>

#include "ccr/error.hpp"

namespace ccr {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline constexpr Vec3 kUnitX{1.0, 0.0, 0.0};
inline constexpr Vec3 kUnitY{0.0, 1.0, 0.0};
inline constexpr Vec3 kUnitZ{0.0, 0.0, 1.0};

/// Upper bound on boost rapidities; cosh(50) ~ 2.6e21 stays far from overflow.
inline constexpr double kMaxRapidity = 50.0;

/// Timelike four-momentum of a massive particle. The invariant mass is
/// carried alongside the components so boosted momenta never recompute it
/// from a cancelling difference E^2 - |p|^2.
class FourMomentum {
public:
    /// From energy and spatial momentum; mass = sqrt(E^2 - |p|^2).
    /// Throws InvalidMomentum unless E > 0 and the mass is real and positive.
    static FourMomentum from_components(double e, Vec3 p);

    /// E = sqrt(m^2 + |p|^2). Throws InvalidMomentum for m <= 0.
    static FourMomentum from_mass(double mass, Vec3 p);

    /// Components with an asserted mass. Throws InvalidMomentum if
    /// E^2 - |p|^2 differs from m^2 by more than 1e-10 relative to E^2.
    static FourMomentum with_mass(double e, Vec3 p, double mass);

    double e() const noexcept { return e_; }
    const Vec3& spatial() const noexcept { return p_; }
    double mass() const noexcept { return mass_; }
    std::array<double, 4> components() const noexcept { return {e_, p_.x, p_.y, p_.z}; }

    /// Unit spatial direction; zero vector for a particle at rest.
    Vec3 direction() const;

private:
    FourMomentum(double e, Vec3 p, double mass) : e_(e), p_(p), mass_(mass) {}

    double e_;
    Vec3 p_;
    double mass_;
};

/// Max-norm distance between component vectors.
double separation(const FourMomentum& a, const FourMomentum& b);

/// Pure boost: rapidity in [0, kMaxRapidity] along a unit direction.
class BoostSpec {
public:
    /// Throws InvalidBoost for a negative, non-finite or capped rapidity, or a
    /// direction whose norm differs from 1 by more than 1e-12.
    BoostSpec(double rapidity, Vec3 direction);

    /// Throws VelocityOutOfRange unless 0 <= v < 1.
    static BoostSpec from_velocity(double v, Vec3 direction);

    double rapidity() const noexcept { return rapidity_; }
    const Vec3& direction() const noexcept { return direction_; }

private:
    double rapidity_;
    Vec3 direction_;
};

/// Real 4x4 matrix acting on (t, x, y, z) column vectors.
class LorentzMatrix {
public:
    LorentzMatrix();  // identity

    static LorentzMatrix identity() { return {}; }

    double& operator()(std::size_t r, std::size_t c) { return m_[r * 4 + c]; }
    double operator()(std::size_t r, std::size_t c) const { return m_[r * 4 + c]; }

    std::array<double, 4> apply(const std::array<double, 4>& v) const;

    /// eta L^T eta, the inverse of any Lorentz transformation.
    LorentzMatrix inverse() const;

    /// max |(L^T eta L - eta)_ij|
    double metric_error() const;

    friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);

private:
    std::array<double, 16> m_{};
};

double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b);

/// omega = atanh(v). Throws VelocityOutOfRange unless 0 <= v < 1.
double rapidity_from_velocity(double v);

/// alpha with cosh(alpha) = E/m.
double momentum_rapidity(const FourMomentum& p);

/// tan(phi) = sinh(omega) sinh(alpha) / (cosh(omega) + cosh(alpha)); the
/// Wigner angle for a boost perpendicular to the particle momentum.
double wigner_angle(double omega, double alpha);

LorentzMatrix boost_matrix(const BoostSpec& boost);

/// The pure boost along p that carries (m, 0, 0, 0) to p.
LorentzMatrix standard_boost(const FourMomentum& p);

/// Lambda p, keeping the invariant mass of p.
FourMomentum boost_momentum(const BoostSpec& boost, const FourMomentum& p);

/// L^{-1}(Lambda p) Lambda L(p) as an explicit 4x4 product.
LorentzMatrix wigner_oracle(const BoostSpec& boost, const FourMomentum& p);

/// Rotation angle in [0, pi] of the spatial 3x3 block.
double rotation_angle(const LorentzMatrix& w);

/// Largest deviation of the spatial block from SO(3) (orthogonality and
/// det = 1) together with the mixing of time and space components.
double rotation_error(const LorentzMatrix& w);

}  // namespace ccr
