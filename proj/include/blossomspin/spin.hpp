#pragma once

#include "blossomspin/projective.hpp"

#include <Eigen/Core>
#include <vector>

namespace blossomspin {

// Pure state of a spin-d/2 system.  amplitudes(k) weights the basis vector
// with k constituents up, i.e. Jz eigenvalue k - d/2; need not be normalized
// (all consumers work projectively).
struct SpinState {
    Eigen::VectorXcd amplitudes;

    explicit SpinState(Eigen::VectorXcd a);

    int d() const { return static_cast<int>(amplitudes.size()) - 1; }

    // Unit norm, first amplitude of magnitude > 1e-12 made real positive.
    SpinState canonical() const;
};

// Unordered multiset of d points on the sphere; the state's root
// constellation.
struct StarConfiguration {
    int d = 0;
    std::vector<RiemannPoint> stars;
};

struct SpinOperators {
    int d = 0;
    Eigen::MatrixXcd jx, jy, jz, jplus, jminus;
};

// Basis state with k ups: amplitudes = unit vector e_k.
SpinState eigenstate(int d, int k);

// Spin state whose constellation is d copies of the point at (theta, phi):
// amplitudes(k) = sqrt(C(d,k)) cos^k(theta/2) sin^{d-k}(theta/2) e^{i(d-k)phi},
// returned canonical.  theta = 0 gives the all-up basis state.
SpinState coherent_state(int d, const SphereAngles& a);

// Jz = diag(k - d/2); J+ has sqrt((k+1)(d-k)) on the superdiagonal (entry
// (k+1, k)); Jx, Jy the usual combinations.  Dimension d+1.
SpinOperators spin_operators(int d);

// Probability of measuring k ups, normalized: |a_k|^2 / ||a||^2.
Eigen::VectorXd measure_distribution(const SpinState& s);

// <s|M|s> / <s|s>, real part (intended for Hermitian M).
double expectation(const SpinState& s, const Eigen::MatrixXcd& m);

// |<a|b>|^2 / (<a|a><b|b>), projective overlap in [0,1].
double fidelity(const SpinState& a, const SpinState& b);

// Root constellation of the state's Majorana polynomial
// P(z,w) = sum_k (-1)^k sqrt(C(d,k)) a_k z^k w^{d-k}.  Vanishing leading
// coefficients (relative threshold 1e-12 of the largest) become stars at
// infinity; the rest are companion-matrix eigenvalues with multiplicity
// restoration for clustered roots.  Every returned finite star is
// residual-checked; failure to certify throws std::runtime_error.
StarConfiguration majorana_stars(const SpinState& s);

// Inverse: expand prod_j (w_j z - z_j w) over canonicalized stars and unscale
// the binomial weights.  state_from_stars(majorana_stars(s)) reproduces s
// projectively.
SpinState state_from_stars(const StarConfiguration& c);

// Greedy minimal matching of the two constellations; returns the largest
// matched angular distance.  Both configurations must have the same d.
double constellation_distance(const StarConfiguration& a, const StarConfiguration& b);

} // namespace blossomspin
