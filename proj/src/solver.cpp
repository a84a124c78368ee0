#include "seasmort/solver.hpp"

#include "seasmort/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace seasmort {

namespace {

// Solves (A)x = rhs for a symmetric matrix, preferring a Cholesky
// factorization and falling back to a pivoted one.
Eigen::MatrixXd solve_symmetric(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs) {
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) return llt.solve(rhs);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible())
        throw SingularSystemError("normal matrix is singular (rank " + std::to_string(lu.rank()) + " of " +
                                  std::to_string(a.rows()) + ")");
    return lu.solve(rhs);
}

void check_weights(const DesignBundle& bundle, const std::vector<std::int64_t>& y,
                   const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != bundle.rows())
        throw InvalidWeightsError("weights length " + std::to_string(weights.size()) + " != design rows " +
                                  std::to_string(bundle.rows()));
    int ones = 0;
    bool in_zero_tail = false;
    for (int w : weights) {
        if (w != 0 && w != 1) throw InvalidWeightsError("weights must be 0 or 1");
        if (w == 1) {
            if (in_zero_tail) throw InvalidWeightsError("weights must be a prefix of ones followed by zeros");
            ++ones;
        } else {
            in_zero_tail = true;
        }
    }
    if (ones != bundle.n_obs)
        throw InvalidWeightsError("weights carry " + std::to_string(ones) + " observations, design expects " +
                                  std::to_string(bundle.n_obs));
    if (static_cast<int>(y.size()) != bundle.n_obs)
        throw InvalidWeightsError("y length " + std::to_string(y.size()) + " != observed months " +
                                  std::to_string(bundle.n_obs));
}

} // namespace

double deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu, const Eigen::VectorXd& weights) {
    if (y.size() != mu.size() || y.size() != weights.size())
        throw ValidationError("deviance inputs must share one length");
    double dev = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (weights(i) == 0.0) continue;
        if (!(mu(i) > 0.0)) throw NonPositiveMuError("fitted mean must be positive at index " + std::to_string(i));
        double term = -(y(i) - mu(i));
        if (y(i) > 0.0) term += y(i) * std::log(y(i) / mu(i));
        dev += weights(i) * term;
    }
    return 2.0 * dev;
}

double effective_dimension(const FitResult& fit, const DesignBundle& bundle) {
    Eigen::VectorXd w = fit.mu;
    w.tail(bundle.n_horizon).setZero();
    Eigen::MatrixXd a = bundle.X.transpose() * w.asDiagonal() * bundle.X;
    return (a * fit.cov_factor).trace();
}

FitResult fit(const DesignBundle& bundle, const std::vector<std::int64_t>& y,
              const std::vector<int>& weights, const FitOptions& options) {
    check_weights(bundle, y, weights);
    const int rows = bundle.rows();
    const int n_obs = bundle.n_obs;
    const int k = bundle.n_coef();

    Eigen::VectorXd yv = Eigen::VectorXd::Zero(rows);
    for (int i = 0; i < n_obs; ++i) yv(i) = static_cast<double>(y[i]);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(rows);
    for (int i = 0; i < rows; ++i) v(i) = weights[i];

    // Conventional Poisson start: y + 0.5 on observed rows, their mean on
    // the forecast rows.
    Eigen::VectorXd mu(rows);
    double start_mean = 0.0;
    for (int i = 0; i < n_obs; ++i) {
        mu(i) = yv(i) + 0.5;
        start_mean += mu(i);
    }
    start_mean /= n_obs;
    for (int i = n_obs; i < rows; ++i) mu(i) = start_mean;
    Eigen::VectorXd eta = mu.array().log();

    FitResult result;
    result.theta = Eigen::VectorXd::Zero(k);
    double prev_penalized = std::numeric_limits<double>::infinity();
    bool have_prev = false;

    for (int iter = 1; iter <= options.max_iter; ++iter) {
        Eigen::VectorXd w = v.cwiseProduct(mu);
        // Working response on the coefficient scale (offset removed).
        Eigen::VectorXd z = (eta - bundle.offset) + (yv - mu).cwiseQuotient(mu);
        Eigen::MatrixXd lhs = bundle.X.transpose() * w.asDiagonal() * bundle.X + bundle.P;
        Eigen::VectorXd rhs = bundle.X.transpose() * (w.cwiseProduct(z));
        Eigen::VectorXd theta = solve_symmetric(lhs, rhs);

        Eigen::VectorXd eta_new = bundle.offset + bundle.X * theta;
        // Step-halve only to escape overflow; plain steps otherwise.
        for (int half = 0; half < 40 && !eta_new.array().isFinite().all(); ++half)
            eta_new = 0.5 * (eta_new + eta);
        if (!eta_new.array().isFinite().all())
            throw SingularSystemError("linear predictor diverged");

        double step = (eta_new.head(n_obs) - eta.head(n_obs)).cwiseAbs().maxCoeff();
        eta = eta_new;
        mu = eta.array().exp();
        result.theta = theta;
        result.iterations = iter;

        double penalized = deviance(yv, mu, v) + theta.dot(bundle.P * theta);
        if (have_prev && penalized > prev_penalized + 1e-8 * (1.0 + std::abs(prev_penalized))) {
            ++result.deviance_increases;
            std::fprintf(stderr, "warning: penalized deviance increased at iteration %d (%.6g -> %.6g)\n", iter,
                         prev_penalized, penalized);
        }
        prev_penalized = penalized;
        have_prev = true;

        if (step < options.tol) {
            result.converged = true;
            break;
        }
    }

    result.eta = eta;
    result.mu = mu;
    result.deviance = deviance(yv, mu, v);

    Eigen::VectorXd w = v.cwiseProduct(mu);
    Eigen::MatrixXd normal = bundle.X.transpose() * w.asDiagonal() * bundle.X;
    result.cov_factor = solve_symmetric(normal + bundle.P, Eigen::MatrixXd::Identity(k, k));
    result.ed = (normal * result.cov_factor).trace();
    return result;
}

FitResult fit(const DesignBundle& bundle, const std::vector<std::int64_t>& y, const FitOptions& options) {
    std::vector<int> weights(static_cast<std::size_t>(bundle.rows()), 0);
    for (int i = 0; i < bundle.n_obs; ++i) weights[static_cast<std::size_t>(i)] = 1;
    return fit(bundle, y, weights, options);
}

} // namespace seasmort
