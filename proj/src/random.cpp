#include "ccr/random.hpp"

namespace ccr {

StateVector random_state(Rng& rng, std::vector<std::size_t> dims) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(total_dimension(dims));
    for (auto& z : amps) z = {gauss(rng), gauss(rng)};
    return StateVector::normalized(std::move(dims), std::move(amps));
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<Complex> entries(rows * cols);
    for (auto& z : entries) z = {uniform(rng), uniform(rng)};
    return ComplexMatrix(rows, cols, std::move(entries));
}

Vec3 random_unit_vector(Rng& rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = norm(v);
        if (n > 1e-6) return (1.0 / n) * v;
    }
}

BoostSpec random_boost(Rng& rng, double max_rapidity) {
    std::uniform_real_distribution<double> rapidity(0.0, max_rapidity);
    const double w = rapidity(rng);
    return BoostSpec(w, random_unit_vector(rng));
}

FourMomentum random_momentum(Rng& rng, double max_rapidity) {
    std::uniform_real_distribution<double> mass(0.5, 2.0);
    std::uniform_real_distribution<double> rapidity(0.0, max_rapidity);
    const double m = mass(rng);
    const double a = rapidity(rng);
    return FourMomentum::from_mass(m, (m * std::sinh(a)) * random_unit_vector(rng));
}

}  // namespace ccr
