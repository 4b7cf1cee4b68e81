#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>

namespace blossomspin {

// Infinite-degree analogue of a Bezier curve: control points P_0, P_1, ...
// weighted by the Poisson law b_i(t) = e^{-t} t^i / i!.  Only finitely many
// control points are stored; evaluation reports how much basis mass falls
// beyond them.
struct PoissonCurve {
    Eigen::MatrixXd points; // row i = control point i

    explicit PoissonCurve(Eigen::MatrixXd pts);

    int count() const { return static_cast<int>(points.rows()); }
    int dimension() const { return static_cast<int>(points.cols()); }
};

struct PoissonPoint {
    Eigen::RowVectorXd value;
    double neglected_mass = 0.0;  // basis weight beyond the stored points
    bool truncated = false;       // true when stored points end before the
                                  // adaptive cutoff
};

// b_i(t) = e^{-t} t^i / i!, t >= 0.  Log-space for large i.
double poisson_basis(long i, double t);

// Index above which the Poisson(t) tail is below 1e-12: ceil of mean plus
// ten standard deviations.
long poisson_cutoff(double t);

// Weighted sum of the stored control points.  If the curve stores fewer
// points than poisson_cutoff(t), the result carries truncated = true and the
// neglected mass; it is not an error, the caller decides.
PoissonPoint evaluate_poisson(const PoissonCurve& curve, double t);

// Multiset label of the i-th Poisson control point in the 0/1 alphabet:
// infinitely many 0s, i ones; rendered "0^inf 1^i".
std::string poisson_point_label(long i);

// sup_k |beta_k^d(lambda/d) - b_k(lambda)| and the index attaining it.
// Requires lambda/d <= 1.  This is the quantity whose decay certifies the
// binomial-to-Poisson limit.
std::pair<double, long> bernstein_poisson_gap(int d, double lambda);

} // namespace blossomspin
