#include "ccr/lorentz.hpp"

#include <algorithm>
#include <string>

namespace ccr {

namespace {

constexpr double kMassRelativeTolerance = 1e-10;
constexpr double kUnitTolerance = 1e-12;

bool finite(Vec3 v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

// Pure boost with cosh = gamma and sinh * direction = gamma_beta, written
// entrywise so that products of large entries can be formed in any scalar type.
template <typename T>
using Mat4 = std::array<T, 16>;

template <typename T>
Mat4<T> pure_boost(T gamma, T gx, T gy, T gz) {
    // Spatial block: delta_ij + (gamma - 1) e_i e_j = delta_ij + g_i g_j / (gamma + 1)
    const std::array<T, 3> g{gx, gy, gz};
    Mat4<T> m{};
    m[0] = gamma;
    for (std::size_t i = 0; i < 3; ++i) {
        m[i + 1] = g[i];
        m[(i + 1) * 4] = g[i];
        for (std::size_t j = 0; j < 3; ++j) {
            m[(i + 1) * 4 + j + 1] = (i == j ? T(1) : T(0)) + g[i] * g[j] / (gamma + T(1));
        }
    }
    return m;
}

template <typename T>
Mat4<T> multiply(const Mat4<T>& a, const Mat4<T>& b) {
    Mat4<T> out{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] += a[r * 4 + k] * b[k * 4 + c];
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FourMomentum

FourMomentum FourMomentum::from_components(double e, Vec3 p) {
    if (!std::isfinite(e) || !finite(p) || e <= 0.0) {
        throw Error(ErrorKind::InvalidMomentum, "energy must be finite and positive");
    }
    const double m2 = (e - norm(p)) * (e + norm(p));
    if (!(m2 > kMassRelativeTolerance * e * e)) {
        throw Error(ErrorKind::InvalidMomentum, "four-momentum is not timelike with positive mass");
    }
    return FourMomentum(e, p, std::sqrt(m2));
}

FourMomentum FourMomentum::from_mass(double mass, Vec3 p) {
    if (!std::isfinite(mass) || mass <= 0.0 || !finite(p)) {
        throw Error(ErrorKind::InvalidMomentum, "mass must be finite and positive");
    }
    return FourMomentum(std::hypot(mass, norm(p)), p, mass);
}

FourMomentum FourMomentum::with_mass(double e, Vec3 p, double mass) {
    if (!std::isfinite(e) || !finite(p) || e <= 0.0 || !(mass > 0.0) || !std::isfinite(mass)) {
        throw Error(ErrorKind::InvalidMomentum, "energy and mass must be finite and positive");
    }
    const double pn = norm(p);
    const double m2 = (e - pn) * (e + pn);
    if (std::abs(m2 - mass * mass) > kMassRelativeTolerance * e * e) {
        throw Error(ErrorKind::InvalidMomentum, "components do not match the asserted mass");
    }
    return FourMomentum(e, p, mass);
}

Vec3 FourMomentum::direction() const {
    const double n = norm(p_);
    return n == 0.0 ? Vec3{} : (1.0 / n) * p_;
}

double separation(const FourMomentum& a, const FourMomentum& b) {
    const auto ca = a.components();
    const auto cb = b.components();
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(ca[i] - cb[i]));
    return worst;
}

// ---------------------------------------------------------------------------
// BoostSpec

BoostSpec::BoostSpec(double rapidity, Vec3 direction) : rapidity_(rapidity), direction_(direction) {
    if (!std::isfinite(rapidity) || rapidity < 0.0 || rapidity > kMaxRapidity) {
        throw Error(ErrorKind::InvalidBoost, "rapidity must lie in [0, " + std::to_string(kMaxRapidity) + "]");
    }
    if (!finite(direction) || std::abs(norm(direction) - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::InvalidBoost, "boost direction must be a unit vector");
    }
}

BoostSpec BoostSpec::from_velocity(double v, Vec3 direction) {
    return BoostSpec(rapidity_from_velocity(v), direction);
}

// ---------------------------------------------------------------------------
// LorentzMatrix

LorentzMatrix::LorentzMatrix() {
    for (std::size_t i = 0; i < 4; ++i) m_[i * 4 + i] = 1.0;
}

std::array<double, 4> LorentzMatrix::apply(const std::array<double, 4>& v) const {
    std::array<double, 4> out{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out[r] += m_[r * 4 + c] * v[c];
    return out;
}

LorentzMatrix LorentzMatrix::inverse() const {
    LorentzMatrix out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const double sign = ((r == 0) != (c == 0)) ? -1.0 : 1.0;
            out(r, c) = sign * (*this)(c, r);
        }
    return out;
}

double LorentzMatrix::metric_error() const {
    static constexpr std::array<double, 4> eta{-1.0, 1.0, 1.0, 1.0};
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += (*this)(k, r) * eta[k] * (*this)(k, c);
            const double expected = r == c ? eta[r] : 0.0;
            worst = std::max(worst, std::abs(acc - expected));
        }
    return worst;
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzMatrix out;
    out.m_ = multiply(a.m_, b.m_);
    return out;
}

double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

// ---------------------------------------------------------------------------
// Boost algebra

double rapidity_from_velocity(double v) {
    if (!std::isfinite(v) || v < 0.0 || v >= 1.0) {
        throw Error(ErrorKind::VelocityOutOfRange, "velocity must satisfy 0 <= v < 1, got " + std::to_string(v));
    }
    return std::atanh(v);
}

double momentum_rapidity(const FourMomentum& p) {
    // asinh(|p|/m) equals acosh(E/m) but keeps full precision near rest.
    return std::asinh(norm(p.spatial()) / p.mass());
}

double wigner_angle(double omega, double alpha) {
    return std::atan(std::sinh(omega) * std::sinh(alpha) / (std::cosh(omega) + std::cosh(alpha)));
}

LorentzMatrix boost_matrix(const BoostSpec& boost) {
    const double w = boost.rapidity();
    const Vec3 g = std::sinh(w) * boost.direction();
    LorentzMatrix out;
    const auto m = pure_boost(std::cosh(w), g.x, g.y, g.z);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = m[r * 4 + c];
    return out;
}

LorentzMatrix standard_boost(const FourMomentum& p) {
    const double m = p.mass();
    const Vec3 g = (1.0 / m) * p.spatial();
    LorentzMatrix out;
    const auto b = pure_boost(p.e() / m, g.x, g.y, g.z);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = b[r * 4 + c];
    return out;
}

FourMomentum boost_momentum(const BoostSpec& boost, const FourMomentum& p) {
    const double ch = std::cosh(boost.rapidity());
    const double sh = std::sinh(boost.rapidity());
    const Vec3& e = boost.direction();
    const double along = dot(e, p.spatial());
    const double energy = ch * p.e() + sh * along;
    const Vec3 spatial = p.spatial() + ((ch - 1.0) * along + sh * p.e()) * e;
    return FourMomentum::with_mass(energy, spatial, p.mass());
}

LorentzMatrix wigner_oracle(const BoostSpec& boost, const FourMomentum& p) {
    // Entries of the three factors grow like e^{rapidity}; the product cancels
    // back to O(1), so it is formed in extended precision.
    using T = long double;
    const T m = p.mass();
    const T w = boost.rapidity();
    // The double unit vector is off by ~1e-16 in norm, enough to break the
    // metric once multiplied by the neighbouring boosts; renormalize here.
    const Vec3& d = boost.direction();
    const T dn = std::sqrt(T(d.x) * d.x + T(d.y) * d.y + T(d.z) * d.z);
    const struct { T x, y, z; } e{d.x / dn, d.y / dn, d.z / dn};
    const T ch = std::cosh(w);
    const T sh = std::sinh(w);

    // Energy re-derived on shell: a double-rounded E is amplified by the boosts.
    const T px = p.spatial().x, py = p.spatial().y, pz = p.spatial().z;
    const T e0 = std::sqrt(m * m + px * px + py * py + pz * pz);
    const auto lift = pure_boost<T>(e0 / m, T(p.spatial().x) / m, T(p.spatial().y) / m, T(p.spatial().z) / m);
    const auto lambda = pure_boost<T>(ch, sh * T(e.x), sh * T(e.y), sh * T(e.z));

    // Lambda p in extended precision, straight from the boost formula.
    const T along = T(e.x) * p.spatial().x + T(e.y) * p.spatial().y + T(e.z) * p.spatial().z;
    const T energy = ch * e0 + sh * along;
    const T shift = (ch - T(1)) * along + sh * e0;
    const std::array<T, 3> q{T(p.spatial().x) + shift * T(e.x), T(p.spatial().y) + shift * T(e.y),
                             T(p.spatial().z) + shift * T(e.z)};
    const auto unlift = pure_boost<T>(energy / m, -q[0] / m, -q[1] / m, -q[2] / m);

    const auto w4 = multiply(unlift, multiply(lambda, lift));
    LorentzMatrix out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = static_cast<double>(w4[r * 4 + c]);
    return out;
}

double rotation_angle(const LorentzMatrix& w) {
    // R = cos(phi) I + sin(phi) [n]_x + (1 - cos(phi)) n n^T
    const double cos_phi = (w(1, 1) + w(2, 2) + w(3, 3) - 1.0) / 2.0;
    const Vec3 axial{(w(3, 2) - w(2, 3)) / 2.0, (w(1, 3) - w(3, 1)) / 2.0, (w(2, 1) - w(1, 2)) / 2.0};
    return std::atan2(norm(axial), cos_phi);
}

double rotation_error(const LorentzMatrix& w) {
    double worst = std::abs(w(0, 0) - 1.0);
    for (std::size_t i = 1; i < 4; ++i) worst = std::max({worst, std::abs(w(0, i)), std::abs(w(i, 0))});
    for (std::size_t r = 1; r < 4; ++r)
        for (std::size_t c = 1; c < 4; ++c) {
            double acc = 0.0;
            for (std::size_t k = 1; k < 4; ++k) acc += w(k, r) * w(k, c);
            worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
        }
    const double det = w(1, 1) * (w(2, 2) * w(3, 3) - w(2, 3) * w(3, 2)) -
                       w(1, 2) * (w(2, 1) * w(3, 3) - w(2, 3) * w(3, 1)) +
                       w(1, 3) * (w(2, 1) * w(3, 2) - w(2, 2) * w(3, 1));
    return std::max(worst, std::abs(det - 1.0));
}

}  // namespace ccr
