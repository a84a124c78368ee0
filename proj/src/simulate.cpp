#include "seasmort/simulate.hpp"

#include "seasmort/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace seasmort {

SimulatedSeries simulate_series(const SimulationSpec& spec) {
    if (spec.months < 1) throw ValidationError("simulation needs at least one month");
    if (!(spec.shock_factor > 0.0)) throw ValidationError("shock factor must be positive");

    const double w = 2.0 * std::numbers::pi / spec.period;
    std::mt19937_64 rng(spec.seed);

    std::vector<double> baseline(static_cast<std::size_t>(spec.months));
    std::vector<double> mean(static_cast<std::size_t>(spec.months));
    std::vector<std::int64_t> deaths(static_cast<std::size_t>(spec.months));
    for (int i = 0; i < spec.months; ++i) {
        double t = static_cast<double>(i + 1);
        double eta = spec.level + spec.slope * (t - 1.0) + spec.quad * (t - 1.0) * (t - 1.0) +
                     spec.cos_amp * std::cos(w * t) + spec.sin_amp * std::sin(w * t);
        baseline[static_cast<std::size_t>(i)] = std::exp(eta);
        bool shocked = spec.shock_months > 0 && i >= spec.shock_start && i < spec.shock_start + spec.shock_months;
        mean[static_cast<std::size_t>(i)] = baseline[static_cast<std::size_t>(i)] * (shocked ? spec.shock_factor : 1.0);
        std::poisson_distribution<std::int64_t> poisson(mean[static_cast<std::size_t>(i)]);
        deaths[static_cast<std::size_t>(i)] = poisson(rng);
    }

    std::optional<std::vector<double>> exposure;
    if (spec.population) {
        exposure.emplace(static_cast<std::size_t>(spec.months), *spec.population / 12.0);
    }
    return SimulatedSeries{MonthlySeries(spec.stratum, spec.start, std::move(deaths), std::move(exposure)),
                           std::move(mean), std::move(baseline)};
}

std::map<int, double> simulate_population(const SimulationSpec& spec) {
    if (!spec.population) throw ValidationError("simulation has no population level");
    std::map<int, double> out;
    int last_year = spec.start.plus(spec.months - 1).year;
    for (int y = spec.start.year; y <= last_year + 1; ++y) out[y] = *spec.population;
    return out;
}

} // namespace seasmort
