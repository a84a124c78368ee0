#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace seasmort {

/// Parameters of an equidistant cubic B-spline basis over a month index.
struct BasisSpec {
    int degree = 3;
    int segments_per_year = 2;
    int domain_length = 0; // months covered (n1 or n1+n2)

    /// Number of equal-width segments: the per-year density applied to the
    /// domain, partial years rounded up.
    int segments() const;

    /// Number of basis functions J = segments + degree.
    int n_basis() const { return segments() + degree; }

    void validate() const;
};

/// Dense evaluation of a B-spline basis at t = 1..domain_length.
///
/// Knots are equidistant over [0, domain_length] (month t is the right
/// endpoint of its month interval) and extended by `degree` knots on each
/// side so the boundary splines are complete; rows sum to one over the
/// whole domain.
struct BasisMatrix {
    Eigen::MatrixXd values;    // domain_length x J
    std::vector<double> knots; // full extended knot sequence, month units
    int degree = 3;
    int segments = 0;

    int n_basis() const { return static_cast<int>(values.cols()); }
};

BasisMatrix make_basis(const BasisSpec& spec);

/// d-th order difference operator: (J-d) x J, integer-valued.
struct DifferenceMatrix {
    int order = 1;
    Eigen::MatrixXd values;
};

DifferenceMatrix make_difference(int order, int n_basis);

/// cos(wt), sin(wt) for t = 1..length with w = 2*pi/period.
std::pair<Eigen::VectorXd, Eigen::VectorXd> harmonics(int length, double period = 12.0);

} // namespace seasmort
