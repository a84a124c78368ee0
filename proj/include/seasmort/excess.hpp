#pragma once

#include "seasmort/forecast.hpp"
#include "seasmort/timeseries.hpp"

#include <string>
#include <vector>

namespace seasmort {

enum class ExcessFlag { Excess, Deficit, Within };

std::string to_string(ExcessFlag flag);

struct Period {
    std::string label;
    MonthKey start;
    MonthKey end; // inclusive
};

/// The three pandemic periods used throughout the excess reports: the first
/// wave and the two epidemiological years after it.
std::vector<Period> covid_period_presets();

struct MonthlyExcessRow {
    MonthKey month;
    double observed = 0.0;
    double expected = 0.0;
    double lower95 = 0.0;
    double upper95 = 0.0;
    double excess = 0.0; // observed - expected
    ExcessFlag flag = ExcessFlag::Within;
    // Rate-scale values (per person-month), present when exposures are known.
    double observed_rate = 0.0;
    double expected_rate = 0.0;
    double lower95_rate = 0.0;
    double upper95_rate = 0.0;
    double excess_rate = 0.0;
};

struct PeriodExcessRow {
    std::string label;
    MonthKey start;
    MonthKey end;
    double observed = 0.0;
    double expected = 0.0;
    double excess = 0.0;
    double lower95 = 0.0; // observed - sum of monthly upper bounds
    double upper95 = 0.0; // observed - sum of monthly lower bounds
    ExcessFlag flag = ExcessFlag::Within;
};

struct ExcessReport {
    std::vector<MonthlyExcessRow> monthly;
    std::vector<PeriodExcessRow> periods;
    bool has_rates = false;
};

/// Compares observed horizon months against the forecast baseline. Periods
/// must be non-overlapping and lie within the observed horizon months.
ExcessReport excess_report(const MonthlySeries& observed, const ForecastResult& forecast,
                           const std::vector<Period>& periods);

} // namespace seasmort
