// Spin-1/2 Wigner rotations and the action of a boost on multipartite states.

#pragma once

#include "ccr/lorentz.hpp"
#include "ccr/multipartite.hpp"
#include "ccr/tensor.hpp"

namespace ccr {

/// SU(2) element cos(phi/2) I + i sin(phi/2) (sigma . n).
struct WignerRotation {
    ComplexMatrix matrix;
    double angle = 0.0;  // phi, radians
    Vec3 axis = kUnitZ;  // n; fixed to z and never read when phi = 0

    static WignerRotation identity();

    /// Builds the matrix from an angle and a unit axis.
    static WignerRotation from_angle_axis(double phi, Vec3 axis);
};

/// Rotation for a particle of momentum p seen from a frame boosted by `boost`:
///   cos(phi/2)   = [C_w C_a + S_w S_a (e.p)] / N
///   sin(phi/2) n = S_w S_a (e x p) / N
///   N = sqrt((1 + cosh w cosh a + sinh w sinh a (e.p)) / 2)
/// with C_x, S_x = cosh(x/2), sinh(x/2), alpha the particle rapidity and
/// e, p unit vectors.
WignerRotation wigner_rotation(const BoostSpec& boost, const FourMomentum& p);

/// A boost specified by its direction and the Wigner angle it induces, for
/// sweeps over phi that do not go through (omega, alpha). Every momentum it
/// acts on must be perpendicular to the direction (or at rest).
struct WignerAngleBoost {
    Vec3 direction;
    double phi = 0.0;
};

/// Throws InvalidBoost for a non-unit direction or phi outside [0, pi/2].
void validate(const WignerAngleBoost& boost);

/// Rotation by `boost.phi` about the unit vector along e x p.
/// Throws NonPerpendicularGeometry when e.p is not zero within 1e-12.
WignerRotation wigner_rotation(const WignerAngleBoost& boost, const FourMomentum& p);

/// Suffix appended to every momentum token by apply_boost.
inline constexpr char kBoostTag = '\'';

/// U(Lambda): every mode |p_i> of every particle becomes |Lambda p_i> and that
/// particle's spin is rotated by D(W(Lambda, p_i)) on the amplitude block
/// where its momentum index is i. Throws LabelCollision if two boosted
/// momenta of one particle coincide within 1e-9.
MultipartiteState apply_boost(const MultipartiteState& state, const BoostSpec& boost);

/// Same action with the spin rotations fixed by the Wigner angle. The frame
/// is formal, so momentum tokens are tagged but the numeric 4-momenta are
/// carried over unchanged.
MultipartiteState apply_boost(const MultipartiteState& state, const WignerAngleBoost& boost);

}  // namespace ccr
