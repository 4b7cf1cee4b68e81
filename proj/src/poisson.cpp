#include "blossomspin/poisson.hpp"

#include "blossomspin/bernstein.hpp"

#include <cmath>
#include <stdexcept>

namespace blossomspin {

PoissonCurve::PoissonCurve(Eigen::MatrixXd pts) : points(std::move(pts)) {
    if (points.rows() < 1)
        throw std::invalid_argument("PoissonCurve: need at least one control point");
    if (points.cols() < 1)
        throw std::invalid_argument("PoissonCurve: points must have a dimension");
}

double poisson_basis(long i, double t) {
    if (i < 0) throw std::invalid_argument("poisson_basis: negative index");
    if (t < 0.0 || !std::isfinite(t))
        throw std::invalid_argument("poisson_basis: t must be finite and >= 0");
    if (t == 0.0) return i == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(i) * std::log(t) - t -
                    std::lgamma(static_cast<double>(i) + 1.0));
}

long poisson_cutoff(double t) {
    if (t < 0.0 || !std::isfinite(t))
        throw std::invalid_argument("poisson_cutoff: t must be finite and >= 0");
    return static_cast<long>(std::ceil(t + 10.0 * std::sqrt(t + 1.0)));
}

PoissonPoint evaluate_poisson(const PoissonCurve& curve, double t) {
    const long needed = poisson_cutoff(t);
    const long stored = curve.count();
    PoissonPoint out;
    out.value = Eigen::RowVectorXd::Zero(curve.dimension());
    double mass = 0.0;
    for (long i = 0; i < stored; ++i) {
        const double w = poisson_basis(i, t);
        out.value += w * curve.points.row(i);
        mass += w;
    }
    out.neglected_mass = std::max(0.0, 1.0 - mass);
    out.truncated = stored < needed;
    return out;
}

std::string poisson_point_label(long i) {
    if (i < 0) throw std::invalid_argument("poisson_point_label: negative index");
    return "0^inf 1^" + std::to_string(i);
}

std::pair<double, long> bernstein_poisson_gap(int d, double lambda) {
    if (d < 1) throw std::invalid_argument("bernstein_poisson_gap: degree must be positive");
    if (lambda < 0.0 || lambda > static_cast<double>(d))
        throw std::invalid_argument("bernstein_poisson_gap: lambda/d must lie in [0,1]");
    const Eigen::VectorXd beta = bernstein_row(d, lambda / d);
    double worst = 0.0;
    long at = 0;
    for (int k = 0; k <= d; ++k) {
        const double gap = std::abs(beta(k) - poisson_basis(k, lambda));
        if (gap > worst) { worst = gap; at = k; }
    }
    // beyond k = d the binomial weight is zero and the Poisson tail is
    // monotone decreasing, so one extra term bounds the rest
    const double tail = poisson_basis(d + 1, lambda);
    if (tail > worst) { worst = tail; at = d + 1; }
    return {worst, at};
}

} // namespace blossomspin
