#pragma once

// Test-side reference implementations, kept deliberately on different
// numerical routes than the library: direct summation against the closed
// basis formula, Pascal-triangle binomials, finite differences, recurrence
// Poisson weights, and a brute-force convex hull.  When a test compares the
// library to one of these, agreement is meaningful.

#include "blossomspin/bernstein.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

inline double pascal_binomial(int d, int k) {
    std::vector<double> row(d + 1, 0.0);
    row[0] = 1.0;
    for (int r = 1; r <= d; ++r)
        for (int j = r; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// closed formula, no recurrence
inline double direct_bernstein(int d, int i, double t) {
    return pascal_binomial(d, i) * std::pow(1.0 - t, d - i) * std::pow(t, i);
}

inline Eigen::RowVectorXd direct_eval(const blossomspin::BezierCurve& c, double t) {
    Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(c.dimension());
    for (int i = 0; i <= c.degree(); ++i)
        acc += direct_bernstein(c.degree(), i, t) * c.points.row(i);
    return acc;
}

inline Eigen::RowVectorXd central_difference(const blossomspin::BezierCurve& c, double t,
                                             double h) {
    return (blossomspin::evaluate(c, t + h) - blossomspin::evaluate(c, t - h)) / (2.0 * h);
}

// e^-lambda lambda^n / n! by stable upward recurrence
inline double poisson_pmf(long n, double lambda) {
    double p = std::exp(-lambda);
    for (long k = 1; k <= n; ++k) p *= lambda / static_cast<double>(k);
    return p;
}

// 2D convex hull membership with tolerance; brute force over all edges
inline bool hull_contains(const Eigen::MatrixXd& pts, const Eigen::RowVector2d& p,
                          double tol) {
    if (pts.cols() != 2) throw std::invalid_argument("hull_contains: 2D only");
    const int n = static_cast<int>(pts.rows());
    std::vector<std::pair<double, double>> h;
    for (int i = 0; i < n; ++i) h.emplace_back(pts(i, 0), pts(i, 1));
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    const auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                          const std::pair<double, double>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    if (h.size() == 1)
        return std::hypot(p(0) - h[0].first, p(1) - h[0].second) <= tol;
    // monotone chain
    std::vector<std::pair<double, double>> hull;
    for (const auto& q : h) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0.0)
            hull.pop_back();
        hull.push_back(q);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0.0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    // inside iff not strictly outside any edge (hull is counterclockwise)
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.first - a.first, b.second - a.second);
        if (len == 0.0) continue;
        const double side = cross(a, b, {p(0), p(1)}) / len;
        if (side < -tol) return false;
    }
    return true;
}

} // namespace oracles
