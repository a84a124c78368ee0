#pragma once

#include "seasmort/basis.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace seasmort {

enum class ModelKind {
    SP,      // linear trend + fixed harmonics, 4 coefficients
    SP_STSS, // smooth trend + smoothly modulated harmonics, [B | CB | SB]
    SP_STFS, // smooth trend + fixed harmonics, [B | c | s]
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct PenaltyConfig {
    double lambda_trend = 1e5;
    double lambda_season = 1e5;
    int order_trend = 2;
    int order_season = 1;

    void validate() const;
};

/// Coefficient block sizes; trend first, then cosine, then sine.
struct CoefficientLayout {
    int trend = 0;
    int cos = 0;
    int sin = 0;

    int total() const { return trend + cos + sin; }
    int cos_begin() const { return trend; }
    int sin_begin() const { return trend + cos; }
};

/// Everything the solver needs: the regression matrix over the full
/// (fit + horizon) index, its block penalty, and the log-exposure offset.
struct DesignBundle {
    ModelKind kind = ModelKind::SP;
    Eigen::MatrixXd X;      // (n_obs + n_horizon) x K
    Eigen::MatrixXd P;      // K x K, symmetric PSD
    CoefficientLayout layout;
    Eigen::VectorXd offset; // log exposure per row, zero when modelling counts
    bool has_exposure = false;
    int n_obs = 0;
    int n_horizon = 0;
    PenaltyConfig penalty;
    std::optional<BasisMatrix> basis; // trend basis for the smooth models

    int rows() const { return n_obs + n_horizon; }
    int n_coef() const { return static_cast<int>(X.cols()); }
};

/// Builds the regression and penalty matrices over t = 1..n_obs+n_horizon.
/// When exposure is given it must cover the full extended index.
DesignBundle build_design(ModelKind kind, int n_obs, int n_horizon, const BasisSpec& spec,
                          const PenaltyConfig& penalty,
                          const std::optional<std::vector<double>>& exposure = std::nullopt);

/// Continues an exposure series n_horizon months into the future at the
/// mean of the last 12 observed months.
std::vector<double> extend_exposure(const std::vector<double>& exposure, int n_horizon);

} // namespace seasmort
