#include "seasmort/evaluation.hpp"

#include "seasmort/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seasmort {

double bic(const FitResult& fit, int n_obs) {
    return 2.0 * fit.deviance + std::log(static_cast<double>(n_obs)) * fit.ed;
}

double rmse(const std::vector<double>& y_test, const std::vector<double>& y_hat) {
    if (y_test.empty() || y_test.size() != y_hat.size())
        throw ValidationError("rmse needs equal-length non-empty inputs");
    double sum = 0.0;
    for (std::size_t i = 0; i < y_test.size(); ++i) {
        double e = y_test[i] - y_hat[i];
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(y_test.size()));
}

double mape(const std::vector<double>& y_test, const std::vector<double>& y_hat) {
    if (y_test.empty() || y_test.size() != y_hat.size())
        throw ValidationError("mape needs equal-length non-empty inputs");
    double sum = 0.0;
    for (std::size_t i = 0; i < y_test.size(); ++i) {
        if (y_test[i] == 0.0)
            throw ZeroObservedError("mape undefined: observation " + std::to_string(i) + " is zero");
        sum += std::abs(100.0 * (y_test[i] - y_hat[i]) / y_test[i]);
    }
    return sum / static_cast<double>(y_test.size());
}

BacktestReport backtest(const MonthlySeries& series, ModelKind kind, int window_years,
                        const PenaltyConfig& penalty, const BasisSpec& spec) {
    const int window_months = window_years * 12;
    const int total = static_cast<int>(series.size());
    if (total < window_months + 12)
        throw ShortSeriesError("series '" + series.stratum() + "' has " + std::to_string(total) +
                               " months; a " + std::to_string(window_years) +
                               "-year window plus a test year needs " + std::to_string(window_months + 12));

    BacktestReport report;
    report.kind = kind;
    report.window_months = window_months;

    const bool on_rates = series.has_exposure();
    for (int begin = 0; begin + window_months + 12 <= total; begin += 12) {
        MonthlySeries fit_window = window(series, series.month_at(begin), window_months);
        MonthlySeries test_window =
            window(series, series.month_at(begin + window_months), 12);

        // BIC from the plain (no-extension) fit of the window.
        DesignBundle plain = build_design(kind, window_months, 0, spec, penalty,
                                          on_rates ? std::optional(fit_window.exposure()) : std::nullopt);
        FitResult plain_fit = fit(plain, fit_window.deaths());

        // One-year-ahead forecast; the test year's exposures are known, so
        // pass them through rather than extrapolating.
        std::optional<std::vector<double>> exposure;
        if (on_rates) {
            exposure = fit_window.exposure();
            exposure->insert(exposure->end(), test_window.exposure().begin(), test_window.exposure().end());
        }
        DesignBundle extended = build_design(kind, window_months, 12, spec, penalty, exposure);
        FitResult extended_fit = fit(extended, fit_window.deaths());

        std::vector<double> observed(12), predicted(12);
        for (int i = 0; i < 12; ++i) {
            double mu_hat = extended_fit.mu(window_months + i);
            if (on_rates) {
                double e = test_window.exposure()[static_cast<std::size_t>(i)];
                observed[i] = 1000.0 * static_cast<double>(test_window.deaths()[static_cast<std::size_t>(i)]) / e;
                predicted[i] = 1000.0 * mu_hat / e;
            } else {
                observed[i] = static_cast<double>(test_window.deaths()[static_cast<std::size_t>(i)]);
                predicted[i] = mu_hat;
            }
        }

        WindowRecord record;
        record.window_start = series.month_at(begin);
        record.bic = bic(plain_fit, window_months);
        record.rmse = rmse(observed, predicted);
        record.mape = mape(observed, predicted);
        report.windows.push_back(record);
    }

    const double n = static_cast<double>(report.windows.size());
    for (const auto& w : report.windows) {
        report.mean_bic += w.bic / n;
        report.mean_rmse += w.rmse / n;
        report.mean_mape += w.mape / n;
    }
    return report;
}

std::vector<std::pair<double, double>> default_lambda_grid() {
    std::vector<double> axis;
    for (int i = 0; i <= 6; ++i) axis.push_back(std::pow(10.0, 4.0 + 0.5 * i));
    std::vector<std::pair<double, double>> grid;
    for (double l1 : axis)
        for (double l2 : axis) grid.emplace_back(l1, l2);
    return grid;
}

GridSearchResult grid_search(const MonthlySeries& series, ModelKind kind,
                             const std::vector<std::pair<double, double>>& grid,
                             const PenaltyConfig& penalty_orders, int window_years, const BasisSpec& spec) {
    if (grid.empty()) throw ValidationError("lambda grid is empty");

    GridSearchResult result;
    result.surface.reserve(grid.size());
    for (const auto& [l1, l2] : grid) {
        PenaltyConfig penalty = penalty_orders;
        penalty.lambda_trend = l1;
        penalty.lambda_season = l2;
        BacktestReport report = backtest(series, kind, window_years, penalty, spec);
        result.surface.push_back({l1, l2, report.mean_mape});
    }

    result.chosen = 0;
    for (std::size_t i = 1; i < result.surface.size(); ++i) {
        const auto& cand = result.surface[i];
        const auto& best = result.surface[result.chosen];
        bool better = cand.mean_mape < best.mean_mape ||
                      (cand.mean_mape == best.mean_mape &&
                       std::tie(cand.lambda_trend, cand.lambda_season) >
                           std::tie(best.lambda_trend, best.lambda_season));
        if (better) result.chosen = i;
    }
    return result;
}

std::vector<TournamentRow> penalty_order_tournament(const MonthlySeries& series, ModelKind kind,
                                                    const PenaltyConfig& lambdas, int window_years,
                                                    const BasisSpec& spec) {
    static constexpr std::pair<int, int> kCombos[] = {{1, 1}, {2, 2}, {1, 2}, {2, 1}};
    std::vector<TournamentRow> rows;
    for (auto [trend, season] : kCombos) {
        PenaltyConfig penalty = lambdas;
        penalty.order_trend = trend;
        penalty.order_season = season;
        BacktestReport report = backtest(series, kind, window_years, penalty, spec);
        rows.push_back({trend, season, report.mean_rmse, report.mean_mape, 0});
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].mean_mape < rows[b].mean_mape; });
    for (std::size_t r = 0; r < order.size(); ++r) rows[order[r]].rank = static_cast<int>(r) + 1;
    return rows;
}

} // namespace seasmort
