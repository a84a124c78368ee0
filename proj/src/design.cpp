#include "seasmort/design.hpp"

#include "seasmort/errors.hpp"

#include <cmath>
#include <numeric>

namespace seasmort {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::SP: return "sp";
        case ModelKind::SP_STSS: return "stss";
        case ModelKind::SP_STFS: return "stfs";
    }
    return "sp";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "sp") return ModelKind::SP;
    if (name == "stss") return ModelKind::SP_STSS;
    if (name == "stfs") return ModelKind::SP_STFS;
    throw ValidationError("unknown model '" + name + "' (expected sp, stss, or stfs)");
}

void PenaltyConfig::validate() const {
    if (!(lambda_trend >= 0.0) || !std::isfinite(lambda_trend))
        throw ValidationError("lambda_trend must be finite and >= 0");
    if (!(lambda_season >= 0.0) || !std::isfinite(lambda_season))
        throw ValidationError("lambda_season must be finite and >= 0");
    if (order_trend < 1 || order_trend > 3) throw ValidationError("order_trend must be in {1,2,3}");
    if (order_season < 1 || order_season > 3) throw ValidationError("order_season must be in {1,2,3}");
}

namespace {

Eigen::VectorXd make_offset(int rows, const std::optional<std::vector<double>>& exposure) {
    if (!exposure) return Eigen::VectorXd::Zero(rows);
    if (static_cast<int>(exposure->size()) != rows)
        throw ExposureLengthMismatchError("exposure length " + std::to_string(exposure->size()) +
                                          " does not cover the extended index of " + std::to_string(rows) +
                                          " months");
    Eigen::VectorXd offset(rows);
    for (int i = 0; i < rows; ++i) {
        if (!((*exposure)[i] > 0.0)) throw NonPositivePopulationError("non-positive exposure in extended index");
        offset(i) = std::log((*exposure)[i]);
    }
    return offset;
}

} // namespace

DesignBundle build_design(ModelKind kind, int n_obs, int n_horizon, const BasisSpec& spec,
                          const PenaltyConfig& penalty,
                          const std::optional<std::vector<double>>& exposure) {
    if (n_obs < 24)
        throw ShortSeriesError("need at least 24 observed months to fit, got " + std::to_string(n_obs));
    if (n_horizon < 0) throw ValidationError("horizon must be >= 0");
    penalty.validate();

    const int rows = n_obs + n_horizon;
    auto [c, s] = harmonics(rows);

    DesignBundle bundle;
    bundle.kind = kind;
    bundle.n_obs = n_obs;
    bundle.n_horizon = n_horizon;
    bundle.penalty = penalty;
    bundle.offset = make_offset(rows, exposure);
    bundle.has_exposure = exposure.has_value();

    if (kind == ModelKind::SP) {
        bundle.layout = CoefficientLayout{2, 1, 1};
        bundle.X = Eigen::MatrixXd(rows, 4);
        for (int t = 1; t <= rows; ++t) {
            bundle.X(t - 1, 0) = 1.0;
            bundle.X(t - 1, 1) = static_cast<double>(t);
        }
        bundle.X.col(2) = c;
        bundle.X.col(3) = s;
        bundle.P = Eigen::MatrixXd::Zero(4, 4);
        return bundle;
    }

    BasisSpec extended = spec;
    extended.domain_length = rows;
    BasisMatrix basis = make_basis(extended);
    const int J = basis.n_basis();
    const Eigen::MatrixXd& B = basis.values;

    auto trend_penalty = [&] {
        DifferenceMatrix d = make_difference(penalty.order_trend, J);
        return Eigen::MatrixXd(penalty.lambda_trend * d.values.transpose() * d.values);
    };

    if (kind == ModelKind::SP_STSS) {
        bundle.layout = CoefficientLayout{J, J, J};
        bundle.X = Eigen::MatrixXd(rows, 3 * J);
        bundle.X.leftCols(J) = B;
        bundle.X.middleCols(J, J) = c.asDiagonal() * B;
        bundle.X.rightCols(J) = s.asDiagonal() * B;

        DifferenceMatrix d2 = make_difference(penalty.order_season, J);
        Eigen::MatrixXd season = penalty.lambda_season * d2.values.transpose() * d2.values;
        bundle.P = Eigen::MatrixXd::Zero(3 * J, 3 * J);
        bundle.P.topLeftCorner(J, J) = trend_penalty();
        bundle.P.block(J, J, J, J) = season;
        bundle.P.bottomRightCorner(J, J) = season;
    } else {
        bundle.layout = CoefficientLayout{J, 1, 1};
        bundle.X = Eigen::MatrixXd(rows, J + 2);
        bundle.X.leftCols(J) = B;
        bundle.X.col(J) = c;
        bundle.X.col(J + 1) = s;
        bundle.P = Eigen::MatrixXd::Zero(J + 2, J + 2);
        bundle.P.topLeftCorner(J, J) = trend_penalty();
    }
    bundle.basis = std::move(basis);
    return bundle;
}

std::vector<double> extend_exposure(const std::vector<double>& exposure, int n_horizon) {
    if (exposure.size() < 12)
        throw ShortSeriesError("need at least 12 observed exposures to extend, got " +
                               std::to_string(exposure.size()));
    std::vector<double> out = exposure;
    double trailing = std::accumulate(exposure.end() - 12, exposure.end(), 0.0) / 12.0;
    out.insert(out.end(), static_cast<std::size_t>(n_horizon), trailing);
    return out;
}

} // namespace seasmort
