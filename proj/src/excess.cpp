#include "seasmort/excess.hpp"

#include "seasmort/errors.hpp"

#include <algorithm>

namespace seasmort {

std::string to_string(ExcessFlag flag) {
    switch (flag) {
        case ExcessFlag::Excess: return "excess";
        case ExcessFlag::Deficit: return "deficit";
        case ExcessFlag::Within: return "within";
    }
    return "within";
}

std::vector<Period> covid_period_presets() {
    return {
        {"first_wave", {2020, 3}, {2020, 6}},
        {"pandemic_year_2020_21", {2020, 7}, {2021, 6}},
        {"pandemic_year_2021_22", {2021, 7}, {2022, 6}},
    };
}

ExcessReport excess_report(const MonthlySeries& observed, const ForecastResult& forecast,
                           const std::vector<Period>& periods) {
    MonthKey horizon_first = forecast.month_at(forecast.horizon_start - 1);
    MonthKey horizon_last = forecast.month_at(forecast.size() - 1);
    if (observed.start() < horizon_first || observed.month_at(observed.size() - 1) > horizon_last)
        throw MonthNotInHorizonError("observed months [" + observed.start().str() + ", " +
                                     observed.month_at(observed.size() - 1).str() +
                                     "] extend outside the forecast horizon [" + horizon_first.str() + ", " +
                                     horizon_last.str() + "]");

    ExcessReport report;
    report.has_rates = forecast.expected_rate.has_value() && observed.has_exposure();

    for (std::size_t i = 0; i < observed.size(); ++i) {
        MonthKey m = observed.month_at(i);
        int fc_index = m.months_since(forecast.start);
        MonthlyExcessRow row;
        row.month = m;
        row.observed = static_cast<double>(observed.deaths()[i]);
        row.expected = forecast.expected(fc_index);
        row.lower95 = forecast.lower95(fc_index);
        row.upper95 = forecast.upper95(fc_index);
        row.excess = row.observed - row.expected;
        row.flag = row.observed > row.upper95   ? ExcessFlag::Excess
                   : row.observed < row.lower95 ? ExcessFlag::Deficit
                                                : ExcessFlag::Within;
        if (report.has_rates) {
            double e = observed.exposure()[i];
            row.observed_rate = row.observed / e;
            row.expected_rate = (*forecast.expected_rate)(fc_index);
            row.lower95_rate = (*forecast.lower95_rate)(fc_index);
            row.upper95_rate = (*forecast.upper95_rate)(fc_index);
            row.excess_rate = row.observed_rate - row.expected_rate;
        }
        report.monthly.push_back(row);
    }

    for (std::size_t a = 0; a < periods.size(); ++a) {
        if (periods[a].end < periods[a].start)
            throw ValidationError("period '" + periods[a].label + "' ends before it starts");
        for (std::size_t b = a + 1; b < periods.size(); ++b)
            if (!(periods[a].end < periods[b].start || periods[b].end < periods[a].start))
                throw OverlappingPeriodsError("periods '" + periods[a].label + "' and '" + periods[b].label +
                                              "' overlap");
    }

    for (const Period& p : periods) {
        if (p.start < observed.start() || observed.month_at(observed.size() - 1) < p.end)
            throw MonthNotInHorizonError("period '" + p.label + "' extends outside the observed horizon");
        PeriodExcessRow row;
        row.label = p.label;
        row.start = p.start;
        row.end = p.end;
        double sum_lower = 0.0, sum_upper = 0.0;
        for (const MonthlyExcessRow& m : report.monthly) {
            if (m.month < p.start || p.end < m.month) continue;
            row.observed += m.observed;
            row.expected += m.expected;
            row.excess += m.excess;
            sum_lower += m.lower95;
            sum_upper += m.upper95;
        }
        // Bound orientation flips: the period's lower bound subtracts the
        // monthly upper bounds.
        row.lower95 = row.observed - sum_upper;
        row.upper95 = row.observed - sum_lower;
        row.flag = row.lower95 > 0.0 ? ExcessFlag::Excess : row.upper95 < 0.0 ? ExcessFlag::Deficit : ExcessFlag::Within;
        report.periods.push_back(row);
    }
    return report;
}

} // namespace seasmort
