#include "ccr/reports.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "ccr/sweep.hpp"

namespace ccr {

namespace {

constexpr double kPrintCutoff = 1e-14;

MomentumPairAspects momentum_aspects(const MultipartiteState& state) {
    const DensityMatrix pair = momentum_reduction(state);
    MomentumPairAspects aspects{coherence_hs(pair), linear_entropy(pair), std::nullopt};
    try {
        aspects.concurrence = concurrence_momentum_x(pair);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotXShaped) throw;
    }
    return aspects;
}

std::string complex_text(Complex z) {
    std::string out = format_number(std::abs(z.real()) < kPrintCutoff ? 0.0 : z.real());
    const double im = std::abs(z.imag()) < kPrintCutoff ? 0.0 : z.imag();
    out += im < 0 ? " - " : " + ";
    out += format_number(std::abs(im)) + "i";
    return out;
}

void print_triple(std::ostream& out, const ComplementarityTriple& t) {
    out << "P=" << format_number(t.predictability) << " C=" << format_number(t.coherence)
        << " S=" << format_number(t.entropy) << " sum=" << format_number(t.sum())
        << " residual=" << format_number(t.residual);
}

void print_pair(std::ostream& out, const char* when, const MomentumPairAspects& a) {
    out << "  " << when << ": C_hs=" << format_number(a.coherence) << " S_l=" << format_number(a.entropy);
    if (a.concurrence) out << " E=" << format_number(*a.concurrence);
    out << '\n';
}

}  // namespace

ScenarioReport evaluate_scenario(ScenarioId id, double theta, double phi, double p_mag, double mass) {
    MultipartiteState initial = make_scenario(id, p_mag, mass);
    MultipartiteState boosted = apply_boost(initial, WignerAngleBoost{boost_direction(theta), phi});
    ScenarioReport report{id, theta, phi, initial, boosted, {}, std::nullopt, std::nullopt};

    const DensityMatrix before = outer(initial.amplitudes());
    const DensityMatrix after = outer(boosted.amplitudes());
    for (std::size_t k = 0; k < initial.particle_count(); ++k)
        for (Dof dof : {Dof::momentum, Dof::spin}) {
            const std::size_t index = initial.subsystem_index(k, dof);
            report.subsystems.push_back({k, dof, ccr(before, index), ccr(after, index)});
        }
    if (initial.particle_count() == 2) {
        report.momenta_before = momentum_aspects(initial);
        report.momenta_after = momentum_aspects(boosted);
    }
    return report;
}

void print_amplitudes(std::ostream& out, const MultipartiteState& state) {
    const auto& psi = state.amplitudes();
    const auto& dims = psi.dims();
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t flat = 0; flat < psi.dimension(); ++flat) {
        if (std::abs(psi[flat]) < kPrintCutoff) continue;
        std::size_t rest = flat;
        for (std::size_t k = dims.size(); k-- > 0;) {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        out << "  |";
        for (std::size_t k = 0; k < dims.size(); ++k) {
            out << (k == 0 ? "" : (k % 2 == 0 ? "; " : ",")) << state.basis_label(k, digits[k]);
        }
        out << ">  " << complex_text(psi[flat]) << '\n';
    }
}

void print_report(std::ostream& out, const ScenarioReport& report) {
    out << "scenario " << to_string(report.id) << "  theta=" << format_number(report.theta)
        << "  phi=" << format_number(report.phi) << '\n';
    out << "initial amplitudes |momentum,spin; ...>:\n";
    print_amplitudes(out, report.initial);
    out << "boosted amplitudes:\n";
    print_amplitudes(out, report.boosted);
    out << "complementarity (d = 2, P + C + S = 1/2):\n";
    for (const auto& s : report.subsystems) {
        out << "  particle " << s.particle << ' ' << to_string(s.dof) << '\n';
        out << "    before: ";
        print_triple(out, s.before);
        out << "\n    after:  ";
        print_triple(out, s.after);
        out << '\n';
    }
    if (report.momenta_before && report.momenta_after) {
        out << "momentum-momentum reduction:\n";
        print_pair(out, "before", *report.momenta_before);
        print_pair(out, "after ", *report.momenta_after);
    }
}

WignerReport evaluate_wigner(const BoostSpec& boost, const FourMomentum& p) {
    const LorentzMatrix oracle = wigner_oracle(boost, p);
    const auto fixed = oracle.apply({p.mass(), 0.0, 0.0, 0.0});
    double fix_error = std::abs(fixed[0] - p.mass());
    for (std::size_t i = 1; i < 4; ++i) fix_error = std::max(fix_error, std::abs(fixed[i]));

    const double alpha = momentum_rapidity(p);
    WignerRotation rotation = wigner_rotation(boost, p);
    return WignerReport{boost.rapidity(),
                        alpha,
                        dot(boost.direction(), p.direction()),
                        rotation.angle,
                        wigner_angle(boost.rapidity(), alpha),
                        rotation_angle(oracle),
                        fix_error,
                        std::move(rotation)};
}

void print_report(std::ostream& out, const WignerReport& r) {
    out << "omega            " << format_number(r.omega) << '\n'
        << "alpha            " << format_number(r.alpha) << '\n'
        << "e.p              " << format_number(r.e_dot_p) << '\n'
        << "phi (half-angle) " << format_number(r.phi_half_angle) << '\n'
        << "phi (tan form)   " << format_number(r.phi_tan)
        << (std::abs(r.e_dot_p) > 1e-12 ? "  (perpendicular geometry only)" : "") << '\n'
        << "phi (4x4 oracle) " << format_number(r.phi_oracle) << '\n'
        << "|half - oracle|  " << format_number(std::abs(r.phi_half_angle - r.phi_oracle)) << '\n'
        << "oracle fixes k   " << format_number(r.oracle_fix_error) << '\n'
        << "axis             (" << format_number(r.rotation.axis.x) << ", " << format_number(r.rotation.axis.y)
        << ", " << format_number(r.rotation.axis.z) << ")\n"
        << "D(W) =\n";
    for (std::size_t row = 0; row < 2; ++row) {
        out << "  [" << complex_text(r.rotation.matrix(row, 0)) << ", " << complex_text(r.rotation.matrix(row, 1))
            << "]\n";
    }
}

}  // namespace ccr
