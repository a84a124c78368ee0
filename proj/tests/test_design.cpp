#include "seasmort/design.hpp"

#include "seasmort/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace seasmort;

TEST_CASE("sp design has the four classic columns") {
    DesignBundle b = build_design(ModelKind::SP, 60, 0, {3, 2, 0}, {});
    CHECK(b.X.rows() == 60);
    CHECK(b.X.cols() == 4);
    CHECK(b.P.isZero(0.0));
    CHECK(b.layout.total() == 4);
    auto [c, s] = harmonics(60);
    for (int t = 1; t <= 60; ++t) {
        CHECK(b.X(t - 1, 0) == 1.0);
        CHECK(b.X(t - 1, 1) == static_cast<double>(t));
        CHECK(b.X(t - 1, 2) == c(t - 1));
        CHECK(b.X(t - 1, 3) == s(t - 1));
    }
}

TEST_CASE("stss design over an extended domain counts 25 splines") {
    DesignBundle b = build_design(ModelKind::SP_STSS, 120, 12, {3, 2, 0}, {});
    CHECK(b.X.rows() == 132);
    CHECK(b.X.cols() == 75);
    CHECK(b.layout.trend == 25);
    CHECK(b.layout.cos == 25);
    CHECK(b.layout.sin == 25);
    CHECK(b.P.rows() == 75);

    // Modulation columns are the trend basis scaled by the harmonic.
    auto [c, s] = harmonics(132);
    const Eigen::MatrixXd& B = b.basis->values;
    CHECK((b.X.middleCols(25, 25) - Eigen::MatrixXd(c.asDiagonal() * B)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((b.X.rightCols(25) - Eigen::MatrixXd(s.asDiagonal() * B)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("stfs penalizes only the trend block") {
    PenaltyConfig penalty;
    penalty.lambda_trend = 50.0;
    DesignBundle b = build_design(ModelKind::SP_STFS, 60, 0, {3, 2, 0}, penalty);
    int J = b.layout.trend;
    CHECK(b.X.cols() == J + 2);
    CHECK(b.P.bottomRightCorner(2, 2).isZero(0.0));
    CHECK(b.P.topLeftCorner(J, J).cwiseAbs().maxCoeff() > 0.0);

    penalty.lambda_trend = 0.0;
    DesignBundle zero = build_design(ModelKind::SP_STFS, 60, 0, {3, 2, 0}, penalty);
    CHECK(zero.P.isZero(0.0));
}

TEST_CASE("stss and stfs share the same trend columns") {
    DesignBundle stss = build_design(ModelKind::SP_STSS, 120, 0, {3, 2, 0}, {});
    DesignBundle stfs = build_design(ModelKind::SP_STFS, 120, 0, {3, 2, 0}, {});
    CHECK(stss.X.leftCols(stss.layout.trend) == stfs.X.leftCols(stfs.layout.trend));
}

TEST_CASE("penalty matrices are symmetric positive semidefinite") {
    for (ModelKind kind : {ModelKind::SP, ModelKind::SP_STSS, ModelKind::SP_STFS}) {
        for (double l : {0.0, 1e2, 1e7}) {
            PenaltyConfig penalty;
            penalty.lambda_trend = l;
            penalty.lambda_season = l / 2.0;
            DesignBundle b = build_design(kind, 60, 6, {3, 2, 0}, penalty);
            CHECK((b.P - b.P.transpose()).cwiseAbs().maxCoeff() == 0.0);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b.P);
            CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * std::max(1.0, b.P.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("trend penalty null space has dimension equal to its order") {
    for (int order : {1, 2}) {
        PenaltyConfig penalty;
        penalty.order_trend = order;
        penalty.lambda_trend = 1.0;
        DesignBundle b = build_design(ModelKind::SP_STFS, 120, 0, {3, 2, 0}, penalty);
        int J = b.layout.trend;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b.P.topLeftCorner(J, J));
        int null_dim = 0;
        for (int i = 0; i < J; ++i)
            if (eig.eigenvalues()(i) < 1e-10) ++null_dim;
        CHECK(null_dim == order);
    }
}

TEST_CASE("exposure enters as a log offset") {
    std::vector<double> exposure(72, 2000.0);
    DesignBundle b = build_design(ModelKind::SP, 60, 12, {3, 2, 0}, {}, exposure);
    CHECK(b.has_exposure);
    CHECK(b.offset.size() == 72);
    CHECK(std::abs(b.offset(0) - std::log(2000.0)) <= 1e-15);
    CHECK_THROWS_AS(build_design(ModelKind::SP, 60, 12, {3, 2, 0}, {}, std::vector<double>(60, 2000.0)),
                    ExposureLengthMismatchError);
}

TEST_CASE("short series are rejected") {
    CHECK_THROWS_AS(build_design(ModelKind::SP, 23, 0, {3, 2, 0}, {}), ShortSeriesError);
}

TEST_CASE("extend_exposure holds the trailing-year mean") {
    std::vector<double> flat(24, 5.0);
    auto extended = extend_exposure(flat, 6);
    REQUIRE(extended.size() == 30);
    for (double e : extended) CHECK(e == 5.0);

    std::vector<double> ramp;
    for (int i = 1; i <= 12; ++i) ramp.push_back(static_cast<double>(i));
    auto mean_tail = extend_exposure(ramp, 3);
    CHECK(mean_tail[12] == 6.5);
    CHECK(mean_tail[14] == 6.5);

    CHECK(extend_exposure(flat, 0) == flat);
    CHECK_THROWS_AS(extend_exposure(std::vector<double>(11, 1.0), 3), ShortSeriesError);
}
