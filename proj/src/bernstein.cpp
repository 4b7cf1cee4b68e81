#include "blossomspin/bernstein.hpp"

#include <cmath>
#include <stdexcept>

namespace blossomspin {

BezierCurve::BezierCurve(Eigen::MatrixXd pts) : points(std::move(pts)) {
    if (points.rows() < 1)
        throw std::invalid_argument("BezierCurve: need at least one control point");
    if (points.cols() < 1)
        throw std::invalid_argument("BezierCurve: points must have a dimension");
}

double binomial(int d, int k) {
    if (d < 0 || k < 0 || k > d)
        throw std::invalid_argument("binomial: index out of range");
    if (d > 56)
        throw std::invalid_argument("binomial: d > 56 is not exact in double");
    // multiplicative form, integer-valued at every step
    double c = 1.0;
    const int kk = std::min(k, d - k);
    for (int j = 1; j <= kk; ++j)
        c = c * static_cast<double>(d - kk + j) / static_cast<double>(j);
    return std::round(c);
}

Eigen::VectorXd bernstein_row(int d, double t) {
    if (d < 0) throw std::invalid_argument("bernstein_row: negative degree");
    Eigen::VectorXd b = Eigen::VectorXd::Zero(d + 1);
    b(0) = 1.0;
    const double s = 1.0 - t;
    for (int r = 1; r <= d; ++r) {
        for (int j = r; j >= 1; --j) b(j) = t * b(j - 1) + s * b(j);
        b(0) *= s;
    }
    return b;
}

double bernstein_basis(int d, int i, double t) {
    if (d < 0) throw std::invalid_argument("bernstein_basis: negative degree");
    if (i < 0 || i > d) throw std::invalid_argument("bernstein_basis: index out of range");
    if (std::abs(t) <= 1.0) return bernstein_row(d, t)(i);

    // |t| > 1: assemble sign and log magnitude separately; C(d,i) via lgamma
    // so degree ~60 never touches an overflowing intermediate.
    const double s = 1.0 - t;
    double sign = 1.0;
    if (t < 0.0 && (i % 2)) sign = -sign;
    if (s < 0.0 && ((d - i) % 2)) sign = -sign;
    double lg = std::lgamma(d + 1.0) - std::lgamma(i + 1.0) - std::lgamma(d - i + 1.0);
    if (i > 0) lg += i * std::log(std::abs(t));
    if (d - i > 0) lg += (d - i) * std::log(std::abs(s));
    return sign * std::exp(lg);
}

Eigen::RowVectorXd evaluate(const BezierCurve& curve, double t) {
    const int d = curve.degree();
    Eigen::MatrixXd level = curve.points;
    const double s = 1.0 - t;
    for (int r = 1; r <= d; ++r)
        for (int j = 0; j <= d - r; ++j)
            level.row(j) = s * level.row(j) + t * level.row(j + 1);
    return level.row(0);
}

Eigen::RowVectorXd blossom(const BezierCurve& curve, const Eigen::VectorXd& args) {
    const int d = curve.degree();
    if (args.size() != d)
        throw std::invalid_argument("blossom: need exactly degree-many arguments");
    Eigen::MatrixXd level = curve.points;
    for (int r = 1; r <= d; ++r) {
        const double t = args(r - 1);
        const double s = 1.0 - t;
        for (int j = 0; j <= d - r; ++j)
            level.row(j) = s * level.row(j) + t * level.row(j + 1);
    }
    return level.row(0);
}

BezierCurve degree_elevate(const BezierCurve& curve) {
    const int d = curve.degree();
    Eigen::MatrixXd q(d + 2, curve.dimension());
    q.row(0) = curve.points.row(0);
    q.row(d + 1) = curve.points.row(d);
    for (int i = 1; i <= d; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(d + 1);
        q.row(i) = a * curve.points.row(i - 1) + (1.0 - a) * curve.points.row(i);
    }
    return BezierCurve(std::move(q));
}

std::pair<BezierCurve, BezierCurve> subdivide(const BezierCurve& curve, double t) {
    const int d = curve.degree();
    const int n = curve.dimension();
    Eigen::MatrixXd level = curve.points;
    Eigen::MatrixXd left(d + 1, n), right(d + 1, n);
    left.row(0) = level.row(0);
    right.row(d) = level.row(d);
    const double s = 1.0 - t;
    for (int r = 1; r <= d; ++r) {
        for (int j = 0; j <= d - r; ++j)
            level.row(j) = s * level.row(j) + t * level.row(j + 1);
        left.row(r) = level.row(0);
        right.row(d - r) = level.row(d - r);
    }
    return {BezierCurve(std::move(left)), BezierCurve(std::move(right))};
}

BezierCurve derivative(const BezierCurve& curve) {
    const int d = curve.degree();
    if (d == 0)
        throw std::invalid_argument("derivative: degree 0 has no hodograph");
    Eigen::MatrixXd h(d, curve.dimension());
    for (int i = 0; i < d; ++i)
        h.row(i) = d * (curve.points.row(i + 1) - curve.points.row(i));
    return BezierCurve(std::move(h));
}

std::string polar_point_label(int d, int i) {
    if (i < 0 || i > d) throw std::invalid_argument("polar_point_label: index out of range");
    if (d <= 5) {
        std::string s = "p(";
        for (int j = 0; j < d; ++j) {
            if (j) s += ",";
            s += (j < d - i) ? "0" : "1";
        }
        return s + ")";
    }
    return "0^" + std::to_string(d - i) + " 1^" + std::to_string(i);
}

} // namespace blossomspin
