#pragma once

#include "seasmort/design.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace seasmort {

struct FitOptions {
    double tol = 1e-7; // max |eta step| over observed rows
    int max_iter = 100;
};

struct FitResult {
    Eigen::VectorXd theta;      // K
    Eigen::VectorXd eta;        // linear predictor over all rows, offset included
    Eigen::VectorXd mu;         // exp(eta)
    double deviance = 0.0;      // Poisson deviance over weighted rows
    double ed = 0.0;            // effective dimension tr(H)
    int iterations = 0;
    bool converged = false;
    int deviance_increases = 0; // penalized-deviance monotonicity violations seen
    Eigen::MatrixXd cov_factor; // (X' V M X + P)^-1
};

/// Poisson deviance 2 * sum_w [ y log(y/mu) - (y - mu) ], with
/// y log(y/mu) = 0 when y = 0. All vectors share one length.
double deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu, const Eigen::VectorXd& weights);

/// tr(H) computed as tr[(X' V M X)(X' V M X + P)^-1] from the converged fit.
double effective_dimension(const FitResult& fit, const DesignBundle& bundle);

/// Penalized IWLS. `y` covers the n_obs observed months; `weights` covers
/// the full extended index as a prefix of ones followed by zeros. Fitted
/// means are returned over all rows. Hitting the iteration cap is reported
/// via converged=false, not an error.
FitResult fit(const DesignBundle& bundle, const std::vector<std::int64_t>& y,
              const std::vector<int>& weights, const FitOptions& options = {});

/// Convenience: weights implied by the bundle's n_obs/n_horizon split.
FitResult fit(const DesignBundle& bundle, const std::vector<std::int64_t>& y,
              const FitOptions& options = {});

} // namespace seasmort
