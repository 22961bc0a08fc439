#include "ccr/check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "ccr/measures.hpp"
#include "ccr/random.hpp"
#include "ccr/scenarios.hpp"
#include "ccr/sweep.hpp"
#include "ccr/wigner.hpp"

namespace ccr {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Tracker {
    double worst = 0.0;
    std::string where;

    void observe(double deviation, const std::string& context) {
        if (deviation > worst || (where.empty() && deviation == worst)) {
            worst = deviation;
            where = context;
        }
    }
};

SuiteResult bounded(std::string name, const Tracker& t, double limit) {
    const bool ok = t.worst <= limit;
    return {std::move(name), ok, t.worst, limit, true, ok ? "" : "worst at " + t.where};
}

Rng suite_rng(std::uint64_t seed, std::uint64_t suite) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite)};
    return Rng(seq);
}

std::string fmt(double v) { return format_number(v); }

// ---------------------------------------------------------------------------
// tensor core

const std::vector<std::vector<std::size_t>> kLayouts{{2, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}};

SuiteResult partial_trace_identity(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 50; ++n) {
        const auto& dims = kLayouts[n % kLayouts.size()];
        const DensityMatrix rho = outer(random_state(rng, dims));
        std::vector<std::size_t> all(dims.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        t.observe(max_abs_diff(partial_trace(rho, all).matrix(), rho.matrix()), "sample " + std::to_string(n));
    }
    return bounded("partial-trace-identity", t, 0.0);
}

SuiteResult partial_trace_norm(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 50; ++n) {
        const auto& dims = kLayouts[n % kLayouts.size()];
        const DensityMatrix rho = outer(random_state(rng, dims));
        for (std::size_t mask = 1; mask < (std::size_t{1} << dims.size()); ++mask) {
            std::vector<std::size_t> keep;
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (mask & (std::size_t{1} << k)) keep.push_back(k);
            t.observe(std::abs(trace(partial_trace(rho, keep).matrix()) - 1.0),
                      "sample " + std::to_string(n) + " mask " + std::to_string(mask));
        }
    }
    return bounded("partial-trace-norm", t, kMatrixTolerance);
}

SuiteResult product_purity(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 100; ++n) {
        const auto a = random_state(rng, {2});
        const auto b = random_state(rng, {n % 2 == 0 ? 2u : 3u});
        std::vector<Complex> amps;
        for (auto x : a.amplitudes())
            for (auto y : b.amplitudes()) amps.push_back(x * y);
        const DensityMatrix rho = outer(StateVector({2, b.dimension()}, amps));
        t.observe(std::abs(purity(partial_trace(rho, {0})) - 1.0), "sample " + std::to_string(n));
        t.observe(std::abs(purity(partial_trace(rho, {1})) - 1.0), "sample " + std::to_string(n));
    }
    return bounded("product-purity", t, kMatrixTolerance);
}

SuiteResult kron_associativity(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 100; ++n) {
        const auto a = random_matrix(rng, 2, 2);
        const auto b = random_matrix(rng, 3, 2);
        const auto c = random_matrix(rng, 2, 3);
        t.observe(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), "sample " + std::to_string(n));
    }
    return bounded("kron-associativity", t, 1e-15);
}

SuiteResult outer_psd(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 20; ++n) {
        const auto& dims = kLayouts[n % kLayouts.size()];
        const DensityMatrix rho = outer(random_state(rng, dims));
        for (int m = 0; m < 100; ++m) {
            const auto v = random_state(rng, dims);
            Complex expectation = 0.0;
            for (std::size_t r = 0; r < rho.dimension(); ++r)
                for (std::size_t c = 0; c < rho.dimension(); ++c) expectation += std::conj(v[r]) * rho(r, c) * v[c];
            t.observe(std::max(0.0, -expectation.real()), "state " + std::to_string(n));
        }
    }
    return bounded("outer-psd", t, kMatrixTolerance);
}

// ---------------------------------------------------------------------------
// relativity

SuiteResult boost_metric(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 100; ++n) {
        const auto boost = random_boost(rng, 5.0);
        t.observe(boost_matrix(boost).metric_error(), "rapidity " + fmt(boost.rapidity()));
    }
    return bounded("boost-metric", t, 1e-10);
}

SuiteResult wigner_su2(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 500; ++n) {
        const auto boost = random_boost(rng, 5.0);
        const auto p = random_momentum(rng, 5.0);
        const auto w = wigner_rotation(boost, p);
        const std::string where = "sample " + std::to_string(n);
        t.observe(unitarity_error(w.matrix), where);
        t.observe(std::abs(det2(w.matrix) - 1.0), where);
        const double c = std::cos(w.angle / 2.0);
        const double s = std::sin(w.angle / 2.0);
        t.observe(std::abs(c * c + s * s - 1.0), where);
    }
    return bounded("wigner-su2", t, kMatrixTolerance);
}

SuiteResult wigner_oracle_agreement(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 500; ++n) {
        const auto boost = random_boost(rng, 5.0);
        const auto p = random_momentum(rng, 5.0);
        const LorentzMatrix w = wigner_oracle(boost, p);
        const std::string where = "sample " + std::to_string(n);
        t.observe(std::abs(rotation_angle(w) - wigner_rotation(boost, p).angle), where);
        const auto k = w.apply({p.mass(), 0.0, 0.0, 0.0});
        t.observe(std::abs(k[0] - p.mass()), where);
        for (std::size_t i = 1; i < 4; ++i) t.observe(std::abs(k[i]), where);
        t.observe(rotation_error(w), where);
    }
    return bounded("wigner-oracle", t, 1e-9);
}

SuiteResult collinear_identity(Rng& rng) {
    Tracker t;
    std::uniform_real_distribution<double> rapidity(0.0, 5.0);
    for (int n = 0; n < 100; ++n) {
        const Vec3 e = random_unit_vector(rng);
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const auto p = FourMomentum::from_mass(1.0, (sign * std::sinh(rapidity(rng))) * e);
        const auto w = wigner_rotation(BoostSpec(rapidity(rng), e), p);
        t.observe(max_abs_diff(w.matrix, ComplexMatrix::identity(2)), "sample " + std::to_string(n));
    }
    return bounded("collinear-identity", t, kMatrixTolerance);
}

MultipartiteState random_two_mode_state(Rng& rng, std::size_t particles) {
    std::vector<Particle> list;
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < particles; ++k) {
        list.push_back(Particle{{{"a", random_momentum(rng, 3.0)}, {"b", random_momentum(rng, 3.0)}}});
        dims.push_back(2);
        dims.push_back(2);
    }
    return MultipartiteState(std::move(list), random_state(rng, dims));
}

SuiteResult global_purity(Rng& rng) {
    Tracker t;
    for (int n = 0; n < 200; ++n) {
        const auto state = random_two_mode_state(rng, 1 + n % 2);
        const auto boosted = apply_boost(state, random_boost(rng, 5.0));
        t.observe(std::abs(purity(outer(boosted.amplitudes())) - 1.0), "sample " + std::to_string(n));
    }
    return bounded("global-purity", t, kStateTolerance);
}

SuiteResult theorem_one(Rng& rng) {
    Tracker t;
    std::uniform_int_distribution<int> mode_count(1, 3);
    for (int n = 0; n < 500; ++n) {
        // one populated mode; the others, if any, carry zero amplitude
        const int modes = mode_count(rng);
        ParticleSpec spec;
        for (int i = 0; i < modes; ++i) {
            spec.modes.push_back({"k" + std::to_string(i), random_momentum(rng, 5.0)});
            spec.momentum_amplitudes.push_back(0.0);
        }
        const auto phase = random_state(rng, {1});
        spec.momentum_amplitudes[static_cast<std::size_t>(n % modes)] = phase[0];
        const auto spin = random_state(rng, {2});
        spec.spin = {spin[0], spin[1]};
        const auto state = make_product_state(std::span(&spec, 1));
        const auto boosted = apply_boost(state, random_boost(rng, 5.0));
        const DensityMatrix spin_state = partial_trace(outer(boosted.amplitudes()), {1});
        t.observe(linear_entropy(spin_state), "sample " + std::to_string(n));
    }
    return bounded("theorem-1", t, kMatrixTolerance);
}

// ---------------------------------------------------------------------------
// measures

struct GridPoint {
    ScenarioId id;
    double theta;
    double phi;
};

template <typename Visit>
void for_each_grid_state(Visit&& visit) {
    const auto thetas = default_theta_grid();
    const auto phis = default_phi_grid();
    for (auto id : kAllScenarios) {
        const auto initial = make_scenario(id);
        for (double theta : thetas)
            for (double phi : phis) {
                const auto boosted = apply_boost(initial, WignerAngleBoost{boost_direction(theta), phi});
                visit(GridPoint{id, theta, phi}, initial, boosted);
            }
    }
}

std::string describe(const GridPoint& g, std::size_t factor) {
    return std::string(to_string(g.id)) + " theta=" + fmt(g.theta) + " phi=" + fmt(g.phi) + " factor " +
           std::to_string(factor);
}

struct Aspects {
    double p, c, s;
};

Aspects aspects(const MeasureSet& m, const DensityMatrix& reduced) {
    return {m.predictability(reduced), m.coherence(reduced), m.entropy(reduced)};
}

std::vector<SuiteResult> grid_suites(const MeasureSet& m) {
    Tracker identity, range;
    std::vector<std::pair<ScenarioId, double>> variation;
    for (auto id : kAllScenarios) variation.emplace_back(id, 0.0);

    for_each_grid_state([&](const GridPoint& g, const MultipartiteState& initial, const MultipartiteState& boosted) {
        const DensityMatrix before = outer(initial.amplitudes());
        const DensityMatrix after = outer(boosted.amplitudes());
        for (std::size_t factor = 0; factor < initial.factor_count(); ++factor) {
            const DensityMatrix r0 = partial_trace(before, {factor});
            const DensityMatrix r1 = partial_trace(after, {factor});
            const double bound = (static_cast<double>(r0.dimension()) - 1.0) / static_cast<double>(r0.dimension());
            const Aspects a0 = aspects(m, r0);
            const Aspects a1 = aspects(m, r1);
            identity.observe(std::abs(a0.p + a0.c + a0.s - bound), describe(g, factor) + " (before)");
            identity.observe(std::abs(a1.p + a1.c + a1.s - bound), describe(g, factor) + " (after)");
            for (double v : {a1.p, a1.c, a1.s}) range.observe(std::max({0.0, -v, v - bound}), describe(g, factor));
            auto& best = std::find_if(variation.begin(), variation.end(), [&](auto& e) { return e.first == g.id; })->second;
            best = std::max({best, std::abs(a1.p - a0.p), std::abs(a1.c - a0.c)});
        }
    });

    double weakest = std::numeric_limits<double>::infinity();
    std::string weakest_id;
    for (const auto& [id, change] : variation)
        if (change < weakest) {
            weakest = change;
            weakest_id = to_string(id);
        }
    const bool varied = weakest > 0.1;
    return {bounded("ccr-identity", identity, 1e-10), bounded("measure-range", range, kMatrixTolerance),
            {"ccr-term-variation", varied, weakest, 0.1, false, varied ? "" : "scenario " + weakest_id}};
}

SuiteResult entropy_oracle(Rng& rng) {
    Tracker t;
    for (const std::vector<std::size_t>& dims : {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{2, 2, 2, 2}}) {
        for (int n = 0; n < 200; ++n) {
            const auto psi = random_state(rng, dims);
            const DensityMatrix rho = outer(psi);
            for (std::size_t k = 0; k < dims.size(); ++k) {
                const double reduced = 1.0 - purity(partial_trace(rho, {k}));
                t.observe(std::abs(linear_entropy_multiindex(psi, k) - reduced),
                          std::to_string(dims.size()) + " factors, sample " + std::to_string(n));
            }
        }
    }
    return bounded("entropy-oracle", t, kMatrixTolerance);
}

SuiteResult xi2_marginal(const MeasureSet& m) {
    Tracker t;
    const auto initial = make_scenario(ScenarioId::xi2);
    for (double theta : default_theta_grid())
        for (double phi : default_phi_grid()) {
            const auto boosted = apply_boost(initial, WignerAngleBoost{boost_direction(theta), phi});
            const DensityMatrix rho = outer(boosted.amplitudes());
            for (std::size_t particle : {0u, 1u}) {
                const auto reduced = partial_trace(rho, {boosted.subsystem_index(particle, Dof::momentum)});
                t.observe(std::abs(m.entropy(reduced) - 0.5), "theta=" + fmt(theta) + " phi=" + fmt(phi));
            }
        }
    return bounded("xi2-momentum-marginal", t, kMatrixTolerance);
}

// Pairs (phi, value) along the default phi grid at theta = pi/2.
std::vector<double> along_phi(ScenarioId id, const std::function<double(const MultipartiteState&)>& f) {
    std::vector<double> values;
    const auto initial = make_scenario(id);
    for (double phi : default_phi_grid())
        values.push_back(f(apply_boost(initial, WignerAngleBoost{boost_direction(kHalfPi), phi})));
    return values;
}

SuiteResult xi2_monotone(const MeasureSet& m) {
    const auto e = along_phi(ScenarioId::xi2, [&](const MultipartiteState& s) {
        const DensityMatrix pair = momentum_reduction(s);
        concurrence_momentum_x(pair);  // X-shape precondition
        return std::sqrt(2.0 * m.coherence(pair));
    });
    Tracker t;
    for (std::size_t i = 1; i < e.size(); ++i) t.observe(std::max(0.0, e[i] - e[i - 1]), "grid step " + std::to_string(i));
    return bounded("xi2-concurrence-monotone", t, 0.0);
}

SuiteResult upsilon_coherence(const MeasureSet& m) {
    const auto c = along_phi(ScenarioId::upsilon, [&](const MultipartiteState& s) {
        return m.coherence(partial_trace(outer(s.amplitudes()), {s.subsystem_index(0, Dof::spin)}));
    });
    Tracker t;
    for (std::size_t i = 1; i < c.size(); ++i) t.observe(std::max(0.0, c[i - 1] - c[i]), "grid step " + std::to_string(i));
    t.observe(std::abs(c.back() - 0.5), "phi = pi/2");
    return bounded("upsilon-spin-coherence", t, kMatrixTolerance);
}

SuiteResult initial_aspects(const MeasureSet& m) {
    Tracker t;
    auto expect = [&](ScenarioId id, std::size_t factor, Aspects want) {
        const auto s = make_scenario(id);
        const Aspects got = aspects(m, partial_trace(outer(s.amplitudes()), {factor}));
        const std::string where = std::string(to_string(id)) + " factor " + std::to_string(factor);
        t.observe(std::abs(got.p - want.p), where);
        t.observe(std::abs(got.c - want.c), where);
        t.observe(std::abs(got.s - want.s), where);
    };
    expect(ScenarioId::psi, 0, {0.0, 0.5, 0.0});
    expect(ScenarioId::psi, 1, {0.5, 0.0, 0.0});
    expect(ScenarioId::xi, 0, {0.0, 0.0, 0.5});
    expect(ScenarioId::xi, 1, {0.0, 0.0, 0.5});
    expect(ScenarioId::phi, 0, {0.0, 0.5, 0.0});
    expect(ScenarioId::phi, 1, {0.0, 0.5, 0.0});
    for (std::size_t particle : {0u, 1u}) {
        expect(ScenarioId::xi2, 2 * particle, {0.0, 0.0, 0.5});
        expect(ScenarioId::xi2, 2 * particle + 1, {0.5, 0.0, 0.0});
        expect(ScenarioId::upsilon, 2 * particle, {0.0, 0.0, 0.5});
        expect(ScenarioId::upsilon, 2 * particle + 1, {0.0, 0.0, 0.5});
    }
    return bounded("scenario-initial-aspects", t, kMatrixTolerance);
}

}  // namespace

MeasureSet MeasureSet::standard() { return {&predictability_l, &coherence_hs, &linear_entropy}; }

std::vector<SuiteResult> run_checks(std::uint64_t seed, const MeasureSet& measures) {
    std::vector<SuiteResult> results;
    std::uint64_t suite = 0;
    auto seeded = [&](SuiteResult (*fn)(Rng&)) {
        Rng rng = suite_rng(seed, suite++);
        results.push_back(fn(rng));
    };
    seeded(partial_trace_identity);
    seeded(partial_trace_norm);
    seeded(product_purity);
    seeded(kron_associativity);
    seeded(outer_psd);
    seeded(boost_metric);
    seeded(wigner_su2);
    seeded(wigner_oracle_agreement);
    seeded(collinear_identity);
    seeded(global_purity);
    seeded(theorem_one);
    seeded(entropy_oracle);
    for (auto& r : grid_suites(measures)) results.push_back(std::move(r));
    results.push_back(xi2_marginal(measures));
    results.push_back(xi2_monotone(measures));
    results.push_back(upsilon_coherence(measures));
    results.push_back(initial_aspects(measures));
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
}

void print_results(std::ostream& out, const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        out << std::left << std::setw(28) << r.name << (r.passed ? "PASS  " : "FAIL  ") << "measured "
            << std::setw(20) << format_number(r.measured) << (r.upper_bound ? "<= " : ">  ") << format_number(r.limit);
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
    }
}

}  // namespace ccr
