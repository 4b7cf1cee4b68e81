#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace blossomspin {

// Control net of a polynomial curve in Bernstein form.  Row i of `points` is
// the control point with polar label 0^{d-i} 1^i; any ambient dimension.
struct BezierCurve {
    Eigen::MatrixXd points;

    explicit BezierCurve(Eigen::MatrixXd pts);

    int degree() const { return static_cast<int>(points.rows()) - 1; }
    int dimension() const { return static_cast<int>(points.cols()); }
};

// C(d, k) as an exact double for d <= 56 (fits the 53-bit mantissa).
double binomial(int d, int k);

// All basis values beta_i^d(t), i = 0..d.  Triangular recurrence; for
// t in [0,1] every intermediate is a convex combination, so the result is
// forward stable.
Eigen::VectorXd bernstein_row(int d, double t);

// Single basis value beta_i^d(t) = C(d,i) (1-t)^{d-i} t^i.  |t| <= 1 goes
// through the recurrence; outside, log-space magnitudes keep d ~ 60 from
// overflowing intermediate binomials.
double bernstein_basis(int d, int i, double t);

// de Casteljau corner cutting.  O(d^2) per evaluation but unconditionally
// stable on [0,1], which is the tradeoff this library wants.
Eigen::RowVectorXd evaluate(const BezierCurve& curve, double t);

// Polar form: one pyramid pass consuming args[r-1] at level r.  args.size()
// must equal the degree.
Eigen::RowVectorXd blossom(const BezierCurve& curve, const Eigen::VectorXd& args);

// Same curve one degree up: Q_i = (i/(d+1)) P_{i-1} + (1 - i/(d+1)) P_i.
BezierCurve degree_elevate(const BezierCurve& curve);

// Split at t; left half reparameterized from [0,t], right from [t,1].
// Control points are the two outer edges of the de Casteljau pyramid.
std::pair<BezierCurve, BezierCurve> subdivide(const BezierCurve& curve, double t);

// Hodograph: degree d-1 with points d (P_{i+1} - P_i).  Degree 0 input is an
// error rather than a zero curve.
BezierCurve derivative(const BezierCurve& curve);

// Multiset label 0^{d-i} 1^i of control point i, e.g. "p(0,0,1,1)" for small
// degree, exponent form above.
std::string polar_point_label(int d, int i);

} // namespace blossomspin
