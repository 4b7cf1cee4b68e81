#include "blossomspin/spin.hpp"

#include "blossomspin/bernstein.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <tuple>

namespace blossomspin {

using cplx = std::complex<double>;

SpinState::SpinState(Eigen::VectorXcd a) : amplitudes(std::move(a)) {
    if (amplitudes.size() < 1)
        throw std::invalid_argument("SpinState: need at least one amplitude");
}

SpinState SpinState::canonical() const {
    Eigen::VectorXcd v = amplitudes;
    const double n = v.norm();
    if (n == 0.0 || !std::isfinite(n))
        throw std::invalid_argument("SpinState: zero state has no canonical form");
    v /= n;
    Eigen::Index lead = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12) { lead = i; break; }
    }
    v /= v(lead) / std::abs(v(lead));
    return SpinState(std::move(v));
}

SpinState eigenstate(int d, int k) {
    if (d < 0 || k < 0 || k > d)
        throw std::invalid_argument("eigenstate: k outside 0..d");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(d + 1);
    a(k) = 1.0;
    return SpinState(std::move(a));
}

SpinState coherent_state(int d, const SphereAngles& a) {
    if (d < 1) throw std::invalid_argument("coherent_state: degree must be positive");
    const double c = std::cos(0.5 * a.theta);
    const double s = std::sin(0.5 * a.theta);
    Eigen::VectorXcd amp(d + 1);
    for (int k = 0; k <= d; ++k) {
        const double mag = std::sqrt(binomial(d, k)) * std::pow(c, k) * std::pow(s, d - k);
        const double ang = (d - k) * a.phi;
        amp(k) = mag * cplx(std::cos(ang), std::sin(ang));
    }
    return SpinState(std::move(amp)).canonical();
}

SpinOperators spin_operators(int d) {
    if (d < 1) throw std::invalid_argument("spin_operators: degree must be positive");
    const int n = d + 1;
    SpinOperators op;
    op.d = d;
    op.jz = Eigen::MatrixXcd::Zero(n, n);
    op.jplus = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) op.jz(k, k) = k - 0.5 * d;
    for (int k = 0; k + 1 < n; ++k)
        op.jplus(k + 1, k) = std::sqrt((k + 1.0) * (d - k));
    op.jminus = op.jplus.adjoint();
    op.jx = 0.5 * (op.jplus + op.jminus);
    op.jy = cplx(0.0, -0.5) * (op.jplus - op.jminus);
    return op;
}

Eigen::VectorXd measure_distribution(const SpinState& s) {
    const double n2 = s.amplitudes.squaredNorm();
    if (n2 == 0.0) throw std::invalid_argument("measure_distribution: zero state");
    return s.amplitudes.cwiseAbs2() / n2;
}

double expectation(const SpinState& s, const Eigen::MatrixXcd& m) {
    const int n = s.d() + 1;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("expectation: operator dimension mismatch");
    const double n2 = s.amplitudes.squaredNorm();
    if (n2 == 0.0) throw std::invalid_argument("expectation: zero state");
    const cplx v = s.amplitudes.adjoint() * m * s.amplitudes;
    return v.real() / n2;
}

double fidelity(const SpinState& a, const SpinState& b) {
    if (a.d() != b.d()) throw std::invalid_argument("fidelity: dimension mismatch");
    const double na = a.amplitudes.squaredNorm(), nb = b.amplitudes.squaredNorm();
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("fidelity: zero state");
    return std::norm(a.amplitudes.dot(b.amplitudes)) / (na * nb);
}

namespace {

// |P(z,w)| at the unit-norm representative of [x : 1], where
// P = sum_k b_k z^k w^{d-k}.  Factoring out the larger coordinate keeps the
// Horner argument inside the unit disk.
double homogeneous_residual(const Eigen::VectorXcd& b, cplx x) {
    const int d = static_cast<int>(b.size()) - 1;
    const double nx = std::abs(x);
    const double scale = std::sqrt(1.0 + nx * nx);
    const cplx z = x / scale, w = 1.0 / scale;
    cplx acc = 0.0;
    if (std::abs(z) <= std::abs(w)) {
        const cplx r = z / w;
        for (int k = d; k >= 0; --k) acc = acc * r + b(k);
        return std::abs(acc) * std::pow(std::abs(w), d);
    }
    const cplx r = w / z;
    for (int k = 0; k <= d; ++k) acc = acc * r + b(k);
    return std::abs(acc) * std::pow(std::abs(z), d);
}

Eigen::VectorXcd poly_derivative(const Eigen::VectorXcd& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::VectorXcd r(std::max(1, n));
    if (n == 0) { r(0) = 0.0; return r; }
    for (int k = 1; k <= n; ++k) r(k - 1) = static_cast<double>(k) * c(k);
    return r;
}

cplx horner(const Eigen::VectorXcd& c, cplx x) {
    cplx acc = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * x + c(k);
    return acc;
}

// Chordal-metric distance of two finite ratios, equals sin of half the
// sphere angle; bounded by 1 and meaningful for huge magnitudes.
double chordal(cplx a, cplx b) {
    return std::abs(a - b) /
           std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

// An m-fold root of p is a simple root of p^{(m-1)}; Newton there recovers
// it to machine precision while the raw eigenvalues smear over a disk of
// radius ~eps^{1/m}.  Returns false if the iteration leaves the cluster
// neighborhood or stalls.
bool refine_multiple_root(const Eigen::VectorXcd& poly, int m, cplx& x) {
    Eigen::VectorXcd pm1 = poly;
    for (int j = 0; j < m - 1; ++j) pm1 = poly_derivative(pm1);
    const Eigen::VectorXcd pm = poly_derivative(pm1);
    const cplx start = x;
    for (int it = 0; it < 60; ++it) {
        const cplx den = horner(pm, x);
        if (!(std::abs(den) > 0.0)) return false;
        const cplx step = horner(pm1, x) / den;
        x -= step;
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
        if (std::abs(x - start) > 0.5 * (1.0 + std::abs(start))) return false;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(x))) return true;
    }
    return false;
}

} // namespace

StarConfiguration majorana_stars(const SpinState& s) {
    const int d = s.d();
    const Eigen::VectorXcd& a = s.amplitudes;
    Eigen::VectorXcd b(d + 1);
    for (int k = 0; k <= d; ++k)
        b(k) = ((k % 2) ? -1.0 : 1.0) * std::sqrt(binomial(d, k)) * a(k);
    const double bmax = b.cwiseAbs().maxCoeff();
    if (bmax == 0.0) throw std::invalid_argument("majorana_stars: zero state");
    if (!std::isfinite(bmax)) throw std::invalid_argument("majorana_stars: non-finite state");
    const double coeff_eps = 1e-12 * bmax;

    StarConfiguration cfg;
    cfg.d = d;
    if (d == 0) return cfg;

    int hi = d;
    while (hi > 0 && std::abs(b(hi)) <= coeff_eps) --hi;
    for (int j = 0; j < d - hi; ++j) cfg.stars.push_back(RiemannPoint::infinity());
    int lo = 0;
    while (lo < hi && std::abs(b(lo)) <= coeff_eps) ++lo;
    for (int j = 0; j < lo; ++j) cfg.stars.push_back(RiemannPoint{0.0, 1.0});

    const int q = hi - lo;
    if (q == 0) return cfg;

    Eigen::VectorXcd c = b.segment(lo, q + 1);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(q, q);
    for (int i = 1; i < q; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < q; ++i) comp(i, q - 1) = -c(i) / c(q);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("majorana_stars: eigenvalue iteration failed");
    std::vector<cplx> roots(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + q);

    // single-linkage clusters in the chordal metric; 0.06 covers the
    // eps^(1/m) eigenvalue smear of an m-fold root up to m ~ 10
    std::vector<int> cluster(q);
    for (int i = 0; i < q; ++i) cluster[i] = i;
    const auto find = [&](int i) {
        while (cluster[i] != i) i = cluster[i] = cluster[cluster[i]];
        return i;
    };
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (chordal(roots[i], roots[j]) < 0.06) cluster[find(i)] = find(j);

    const double rtol = 1e-8 * b.norm();
    std::vector<cplx> final_roots;
    for (int rep = 0; rep < q; ++rep) {
        if (find(rep) != rep) continue;
        std::vector<cplx> members;
        for (int i = 0; i < q; ++i)
            if (find(i) == rep) members.push_back(roots[i]);
        const int m = static_cast<int>(members.size());
        bool merged = false;
        if (m >= 2) {
            cplx centroid = 0.0;
            for (cplx r : members) centroid += r;
            centroid /= static_cast<double>(m);
            // refine in whichever chart keeps the iterate inside the unit
            // disk; the reversed polynomial has the reciprocal roots
            cplx x = centroid;
            bool ok;
            if (std::abs(centroid) <= 1.0) {
                ok = refine_multiple_root(c, m, x);
            } else {
                cplx y = 1.0 / centroid;
                ok = refine_multiple_root(c.reverse().eval(), m, y);
                ok = ok && std::abs(y) > 0.0;
                if (ok) x = 1.0 / y;
            }
            if (ok && homogeneous_residual(b, x) <= rtol) {
                for (int j = 0; j < m; ++j) final_roots.push_back(x);
                merged = true;
            }
        }
        if (!merged)
            for (cplx r : members) final_roots.push_back(r);
    }

    for (cplx r : final_roots) {
        if (homogeneous_residual(b, r) > rtol)
            throw std::runtime_error("majorana_stars: root failed the residual gate");
        cfg.stars.push_back(RiemannPoint::from_ratio(r).canonical());
    }
    return cfg;
}

SpinState state_from_stars(const StarConfiguration& cfg) {
    if (static_cast<int>(cfg.stars.size()) != cfg.d)
        throw std::invalid_argument("state_from_stars: need exactly d stars");
    const int d = cfg.d;
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(d + 1);
    b(0) = 1.0;
    int deg = 0;
    for (const RiemannPoint& star : cfg.stars) {
        const RiemannPoint p = star.canonical();
        // multiply by (w_j z - z_j w)
        for (int k = deg + 1; k >= 1; --k) b(k) = p.w * b(k - 1) - p.z * b(k);
        b(0) = -p.z * b(0);
        ++deg;
    }
    Eigen::VectorXcd a(d + 1);
    for (int k = 0; k <= d; ++k)
        a(k) = ((k % 2) ? -1.0 : 1.0) * b(k) / std::sqrt(binomial(d, k));
    return SpinState(std::move(a)).canonical();
}

double constellation_distance(const StarConfiguration& a, const StarConfiguration& b) {
    if (a.d != b.d || a.stars.size() != b.stars.size())
        throw std::invalid_argument("constellation_distance: size mismatch");
    const int n = static_cast<int>(a.stars.size());
    std::vector<std::tuple<double, int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pairs.emplace_back(angular_distance(a.stars[i], b.stars[j]), i, j);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
    std::vector<char> ua(n, 0), ub(n, 0);
    double worst = 0.0;
    int matched = 0;
    for (const auto& [dist, i, j] : pairs) {
        if (ua[i] || ub[j]) continue;
        ua[i] = ub[j] = 1;
        worst = std::max(worst, dist);
        if (++matched == n) break;
    }
    return worst;
}

} // namespace blossomspin
