#pragma once

#include "seasmort/timeseries.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seasmort {

/// Synthetic monthly deaths: log mean = level + slope*(t-1) + quad*(t-1)^2
/// + cos_amp*cos(wt) + sin_amp*sin(wt), Poisson noise, optional
/// multiplicative shock over a month window.
struct SimulationSpec {
    std::string stratum = "SYN";
    MonthKey start{2010, 1};
    int months = 132;
    double level = 6.0;   // log scale
    double slope = 0.0;   // per month, log scale
    double quad = 0.0;    // per month^2, log scale
    double cos_amp = 0.1;
    double sin_amp = 0.03;
    double period = 12.0;
    std::uint64_t seed = 1;
    // Shock window, 0-based month offsets [shock_start, shock_start+shock_months).
    int shock_start = -1;
    int shock_months = 0;
    double shock_factor = 1.0;
    // When set, a flat jan1 population is emitted so exposures can be derived.
    std::optional<double> population;
};

struct SimulatedSeries {
    MonthlySeries series;
    std::vector<double> true_mean;     // shock included
    std::vector<double> baseline_mean; // shock excluded
};

SimulatedSeries simulate_series(const SimulationSpec& spec);

/// Jan-1 population rows covering every series year plus the following one.
std::map<int, double> simulate_population(const SimulationSpec& spec);

} // namespace seasmort
