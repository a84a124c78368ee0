#pragma once

#include "seasmort/design.hpp"
#include "seasmort/solver.hpp"
#include "seasmort/timeseries.hpp"

#include <Eigen/Dense>

#include <optional>

namespace seasmort {

/// 95% two-sided normal quantile used for every interval.
inline constexpr double kZ95 = 1.959964;

/// Expected deaths (and rates, when exposures are present) over the fit
/// period plus horizon, with delta-method 95% bounds on the log scale.
struct ForecastResult {
    MonthKey start;                 // first fit month
    int horizon_start = 0;          // 1-based index of the first forecast month
    Eigen::VectorXd expected;       // fitted/forecast means, count scale
    Eigen::VectorXd lower95;
    Eigen::VectorXd upper95;
    Eigen::VectorXd se_eta;         // sqrt diag Var(X theta_hat)
    Eigen::VectorXd trend;          // exp(offset + trend block), count scale
    std::optional<Eigen::VectorXd> expected_rate; // mean / exposure
    std::optional<Eigen::VectorXd> lower95_rate;
    std::optional<Eigen::VectorXd> upper95_rate;
    std::optional<Eigen::VectorXd> exposure;      // extended exposures used

    int size() const { return static_cast<int>(expected.size()); }
    MonthKey month_at(int i) const { return start.plus(i); }
};

/// Fits the extended design with zero weights on the horizon and reads the
/// forecasts off the fitted means. Exposures, when present, are continued
/// with extend_exposure.
ForecastResult forecast(ModelKind kind, const MonthlySeries& series, int horizon, const BasisSpec& spec,
                        const PenaltyConfig& penalty, const FitOptions& options = {});

/// Same, but from an already-built bundle and fit (the bundle's horizon
/// rows are the forecast months).
ForecastResult forecast_from_fit(const DesignBundle& bundle, const FitResult& fit, MonthKey start);

struct SeasonalDecomposition {
    Eigen::VectorXd detrended;  // y / exp(offset + trend block)
    Eigen::VectorXd modulation; // f cos(wt) + g sin(wt)
    Eigen::VectorXd amplitude;  // sqrt(f^2 + g^2)
};

/// Reconstructs f = B beta, g = B gamma from an SP-STSS fit, over the
/// observed months only.
SeasonalDecomposition seasonal_decomposition(const DesignBundle& bundle, const FitResult& fit,
                                             const std::vector<std::int64_t>& y);

} // namespace seasmort
