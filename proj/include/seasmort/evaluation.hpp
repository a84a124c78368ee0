#pragma once

#include "seasmort/design.hpp"
#include "seasmort/forecast.hpp"
#include "seasmort/solver.hpp"
#include "seasmort/timeseries.hpp"

#include <utility>
#include <vector>

namespace seasmort {

/// BIC = 2 Dev + log(n) tr(H), for fits without a forecast extension.
double bic(const FitResult& fit, int n_obs);

double rmse(const std::vector<double>& y_test, const std::vector<double>& y_hat);

/// Mean absolute percentage error, in percent. Observations must be nonzero.
double mape(const std::vector<double>& y_test, const std::vector<double>& y_hat);

struct WindowRecord {
    MonthKey window_start;
    double bic = 0.0;
    double rmse = 0.0;
    double mape = 0.0;
};

struct BacktestReport {
    ModelKind kind = ModelKind::SP;
    int window_months = 0;
    std::vector<WindowRecord> windows;
    double mean_bic = 0.0;
    double mean_rmse = 0.0;
    double mean_mape = 0.0;
};

/// Rolling one-year-ahead backtest. Windows start every 12 months; each is
/// fitted, then scored against the following 12 held-out months. When
/// exposures are present, errors are computed on rates x 1000.
BacktestReport backtest(const MonthlySeries& series, ModelKind kind, int window_years,
                        const PenaltyConfig& penalty, const BasisSpec& spec);

struct GridSearchResult {
    struct Point {
        double lambda_trend;
        double lambda_season;
        double mean_mape;
    };
    std::vector<Point> surface;
    std::size_t chosen = 0; // index into surface

    const Point& chosen_point() const { return surface[chosen]; }
};

/// Half-decade grid 10^4 .. 10^7, 7 values per axis (49 pairs).
std::vector<std::pair<double, double>> default_lambda_grid();

/// Scores every (lambda_trend, lambda_season) pair by backtest mean MAPE.
/// Ties prefer larger lambda_trend, then larger lambda_season.
GridSearchResult grid_search(const MonthlySeries& series, ModelKind kind,
                             const std::vector<std::pair<double, double>>& grid,
                             const PenaltyConfig& penalty_orders, int window_years, const BasisSpec& spec);

struct TournamentRow {
    int order_trend;
    int order_season;
    double mean_rmse;
    double mean_mape;
    int rank; // 1 = lowest mean MAPE
};

/// Backtests the four penalty-order combinations (1,1), (2,2), (1,2), (2,1)
/// at fixed lambdas and ranks them by mean MAPE.
std::vector<TournamentRow> penalty_order_tournament(const MonthlySeries& series, ModelKind kind,
                                                    const PenaltyConfig& lambdas, int window_years,
                                                    const BasisSpec& spec);

} // namespace seasmort
