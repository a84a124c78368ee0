#include "seasmort/forecast.hpp"

#include "seasmort/errors.hpp"

#include <cmath>

namespace seasmort {

ForecastResult forecast_from_fit(const DesignBundle& bundle, const FitResult& fit, MonthKey start) {
    const int rows = bundle.rows();
    ForecastResult out;
    out.start = start;
    out.horizon_start = bundle.n_obs + 1;
    out.expected = fit.mu;

    out.se_eta = Eigen::VectorXd(rows);
    for (int t = 0; t < rows; ++t) {
        Eigen::VectorXd x = bundle.X.row(t);
        double var = x.dot(fit.cov_factor * x);
        out.se_eta(t) = std::sqrt(std::max(var, 0.0));
    }
    out.lower95 = (fit.eta - kZ95 * out.se_eta).array().exp();
    out.upper95 = (fit.eta + kZ95 * out.se_eta).array().exp();

    Eigen::VectorXd trend_eta = bundle.offset + bundle.X.leftCols(bundle.layout.trend) *
                                                    fit.theta.head(bundle.layout.trend);
    out.trend = trend_eta.array().exp();

    if (bundle.has_exposure) {
        Eigen::VectorXd exposures = bundle.offset.array().exp();
        out.exposure = exposures;
        out.expected_rate = out.expected.cwiseQuotient(exposures);
        out.lower95_rate = out.lower95.cwiseQuotient(exposures);
        out.upper95_rate = out.upper95.cwiseQuotient(exposures);
    }
    return out;
}

ForecastResult forecast(ModelKind kind, const MonthlySeries& series, int horizon, const BasisSpec& spec,
                        const PenaltyConfig& penalty, const FitOptions& options) {
    if (series.size() < 24)
        throw ShortSeriesError("need at least 24 observed months to forecast, got " +
                               std::to_string(series.size()));
    if (horizon < 1) throw ValidationError("forecast horizon must be >= 1");

    const int n_obs = static_cast<int>(series.size());
    std::optional<std::vector<double>> exposure;
    if (series.has_exposure()) exposure = extend_exposure(series.exposure(), horizon);

    DesignBundle bundle = build_design(kind, n_obs, horizon, spec, penalty, exposure);
    FitResult fitted = fit(bundle, series.deaths());
    return forecast_from_fit(bundle, fitted, series.start());
}

SeasonalDecomposition seasonal_decomposition(const DesignBundle& bundle, const FitResult& fit,
                                             const std::vector<std::int64_t>& y) {
    if (bundle.kind != ModelKind::SP_STSS)
        throw WrongModelKindError("seasonal decomposition requires an SP-STSS fit, got " + to_string(bundle.kind));
    if (static_cast<int>(y.size()) != bundle.n_obs)
        throw ValidationError("y length " + std::to_string(y.size()) + " != observed months " +
                              std::to_string(bundle.n_obs));

    const int n = bundle.n_obs;
    const int J = bundle.layout.trend;
    const Eigen::MatrixXd& B = bundle.basis->values;

    Eigen::VectorXd f = (B * fit.theta.segment(bundle.layout.cos_begin(), J)).head(n);
    Eigen::VectorXd g = (B * fit.theta.segment(bundle.layout.sin_begin(), J)).head(n);
    auto [c, s] = harmonics(n);

    SeasonalDecomposition out;
    out.modulation = f.cwiseProduct(c) + g.cwiseProduct(s);
    out.amplitude = (f.array().square() + g.array().square()).sqrt();

    Eigen::VectorXd trend_eta = (bundle.offset + B * fit.theta.head(J)).head(n);
    out.detrended = Eigen::VectorXd(n);
    for (int t = 0; t < n; ++t) out.detrended(t) = static_cast<double>(y[t]) / std::exp(trend_eta(t));
    return out;
}

} // namespace seasmort
