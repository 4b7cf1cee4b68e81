#include "blossomspin/oscillator.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace blossomspin {

FockState::FockState(Eigen::VectorXcd a) : amplitudes(std::move(a)) {
    if (amplitudes.size() < 1)
        throw std::invalid_argument("FockState: need at least one amplitude");
}

LadderOperators ladder_operators(int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("ladder_operators: cutoff must be >= 1");
    const int n = cutoff + 1;
    LadderOperators l;
    l.cutoff = cutoff;
    l.lower = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) l.lower(k - 1, k) = std::sqrt(static_cast<double>(k));
    l.raise = l.lower.adjoint();
    // diag(0..N) written directly: sqrt(k)*sqrt(k) would round off k
    l.number = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) l.number(k, k) = static_cast<double>(k);
    return l;
}

int coherent_cutoff(double z) {
    const double lambda = z * z;
    return static_cast<int>(std::ceil(lambda + 10.0 * std::sqrt(lambda + 1.0)));
}

FockState oscillator_coherent(double z, int cutoff) {
    if (z < 0.0 || !std::isfinite(z))
        throw std::invalid_argument("oscillator_coherent: amplitude must be finite and >= 0");
    if (cutoff < coherent_cutoff(z))
        throw std::invalid_argument(
            "oscillator_coherent: cutoff too small for this amplitude, "
            "the dropped tail would exceed library tolerances");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(cutoff + 1);
    if (z == 0.0) {
        a(0) = 1.0;
        return FockState(std::move(a));
    }
    const double lambda = z * z;
    // log-space keeps n! and z^n from overflowing long before they cancel
    for (int n = 0; n <= cutoff; ++n)
        a(n) = std::exp(-0.5 * lambda + n * std::log(z) - 0.5 * std::lgamma(n + 1.0));
    return FockState(std::move(a));
}

FockState oscillator_coherent_mean(double lambda, int cutoff) {
    if (lambda < 0.0) throw std::invalid_argument("oscillator_coherent_mean: negative mean");
    return oscillator_coherent(std::sqrt(lambda), cutoff);
}

std::vector<std::pair<int, int>> sector_basis(int d) {
    if (d < 0) throw std::invalid_argument("sector_basis: negative degree");
    std::vector<std::pair<int, int>> v;
    v.reserve(d + 1);
    for (int i = 0; i <= d; ++i) v.emplace_back(d - i, i);
    return v;
}

SpinOperators schwinger_spin(int d) {
    if (d < 1) throw std::invalid_argument("schwinger_spin: degree must be positive");
    const int n = d + 1;
    const LadderOperators l = ladder_operators(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

    // two-mode operators; mode 1 is the left Kronecker factor
    const Eigen::MatrixXcd jp_full = Eigen::kroneckerProduct(l.raise, l.lower);
    const Eigen::MatrixXcd jm_full = Eigen::kroneckerProduct(l.lower, l.raise);
    const Eigen::MatrixXcd jz_full =
        0.5 * (Eigen::kroneckerProduct(l.number, id) - Eigen::kroneckerProduct(id, l.number));

    // isometry onto the total-quanta-d sector; spin index k (ups) lands on
    // |n1 = k, n2 = d - k>, which is what makes the restriction match
    // spin_operators entry for entry
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n * n, n);
    for (int k = 0; k <= d; ++k) v(k * n + (d - k), k) = 1.0;

    SpinOperators op;
    op.d = d;
    op.jplus = v.adjoint() * jp_full * v;
    op.jminus = v.adjoint() * jm_full * v;
    op.jz = v.adjoint() * jz_full * v;
    op.jx = 0.5 * (op.jplus + op.jminus);
    op.jy = std::complex<double>(0.0, -0.5) * (op.jplus - op.jminus);
    return op;
}

} // namespace blossomspin
