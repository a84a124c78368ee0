#include "seasmort/basis.hpp"

#include "seasmort/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace seasmort {

int BasisSpec::segments() const {
    // Per-year density applied to the whole domain; partial years round up.
    return static_cast<int>(std::ceil(static_cast<double>(domain_length) * segments_per_year / 12.0));
}

void BasisSpec::validate() const {
    if (degree < 1) throw DegenerateDomainError("spline degree must be >= 1, got " + std::to_string(degree));
    if (segments_per_year < 1)
        throw DegenerateDomainError("segments_per_year must be >= 1, got " + std::to_string(segments_per_year));
    if (domain_length < 12)
        throw DegenerateDomainError("domain must cover at least 12 months, got " + std::to_string(domain_length));
    if (segments() < 1) throw DegenerateDomainError("domain yields no segments");
}

namespace {

// Value of each of the degree+1 B-splines that are nonzero at x, by the
// Cox-de Boor recursion. `span` is the knot interval index with
// knots[span] <= x < knots[span+1].
void cox_de_boor(const std::vector<double>& knots, int span, int degree, double x, std::vector<double>& values) {
    values.assign(degree + 1, 0.0);
    values[0] = 1.0;
    std::vector<double> left(degree + 1, 0.0), right(degree + 1, 0.0);
    for (int j = 1; j <= degree; ++j) {
        left[j] = x - knots[span + 1 - j];
        right[j] = knots[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            double temp = values[r] / (right[r + 1] + left[j - r]);
            values[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        values[j] = saved;
    }
}

} // namespace

BasisMatrix make_basis(const BasisSpec& spec) {
    spec.validate();
    const int degree = spec.degree;
    const int segments = spec.segments();
    const int n_basis = segments + degree;
    const double width = static_cast<double>(spec.domain_length) / segments;

    // Inner knots 0..domain_length plus `degree` equidistant knots per side.
    std::vector<double> knots(segments + 1 + 2 * degree);
    for (int k = 0; k < static_cast<int>(knots.size()); ++k) knots[k] = (k - degree) * width;

    BasisMatrix out;
    out.degree = degree;
    out.segments = segments;
    out.knots = knots;
    out.values = Eigen::MatrixXd::Zero(spec.domain_length, n_basis);

    std::vector<double> local;
    for (int t = 1; t <= spec.domain_length; ++t) {
        double x = static_cast<double>(t);
        int span = degree + static_cast<int>(std::floor(x / width));
        // The right boundary belongs to the last interior interval.
        if (span > degree + segments - 1) span = degree + segments - 1;
        cox_de_boor(knots, span, degree, x, local);
        for (int r = 0; r <= degree; ++r) out.values(t - 1, span - degree + r) = local[r];
    }
    return out;
}

DifferenceMatrix make_difference(int order, int n_basis) {
    if (order < 1 || order >= n_basis)
        throw OrderTooLargeError("difference order " + std::to_string(order) + " too large for " +
                                 std::to_string(n_basis) + " basis functions");
    Eigen::MatrixXd d = Eigen::MatrixXd::Identity(n_basis, n_basis);
    for (int k = 0; k < order; ++k) {
        const auto rows = d.rows() - 1;
        Eigen::MatrixXd next(rows, n_basis);
        next = d.bottomRows(rows) - d.topRows(rows);
        d = std::move(next);
    }
    return DifferenceMatrix{order, std::move(d)};
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> harmonics(int length, double period) {
    if (!(period > 0.0)) throw ValidationError("harmonic period must be positive");
    const double w = 2.0 * std::numbers::pi / period;
    Eigen::VectorXd c(length), s(length);
    for (int t = 1; t <= length; ++t) {
        c(t - 1) = std::cos(w * t);
        s(t - 1) = std::sin(w * t);
    }
    return {std::move(c), std::move(s)};
}

} // namespace seasmort
