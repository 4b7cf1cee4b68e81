#pragma once

#include "blossomspin/spin.hpp"

#include <Eigen/Core>
#include <utility>
#include <vector>

namespace blossomspin {

// State of one oscillator mode truncated to quanta 0..N.
struct FockState {
    Eigen::VectorXcd amplitudes;

    explicit FockState(Eigen::VectorXcd a);

    int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
};

// Matrix truncations of a, a^dag, N = a^dag a on span{|0>..|N>}.  All
// identities that involve the deleted row |N+1> bend at index N: the
// commutator [a, a^dag] is the identity except for entry (N,N) = -N.
struct LadderOperators {
    int cutoff = 0;
    Eigen::MatrixXcd lower, raise, number;
};

LadderOperators ladder_operators(int cutoff);

// Smallest cutoff this library accepts for a coherent state of amplitude z:
// mean z^2 plus ten standard deviations, which leaves < 1e-12 of the mass
// in the dropped tail.
int coherent_cutoff(double z);

// Truncated coherent state, c_n = e^{-z^2/2} z^n / sqrt(n!), z real >= 0.
// A cutoff below coherent_cutoff(z) is refused: the dropped tail would be
// visible at the library's own tolerances.
FockState oscillator_coherent(double z, int cutoff);

// Same state addressed by the mean occupation lambda = z^2.
FockState oscillator_coherent_mean(double lambda, int cutoff);

// Quanta pairs (n1, n2) spanning the total-occupation-d sector, listed as
// (d,0), (d-1,1), ..., (0,d); entry i is the polar label 0^{n1} 1^{n2} of
// control point i.
std::vector<std::pair<int, int>> sector_basis(int d);

// Spin operators realized on two oscillators restricted to the d-quanta
// sector: J+ = a1^dag a2, J- = a2^dag a1, Jz = (N1 - N2)/2, conjugated by
// the isometry that sends spin index k to |n1 = k, n2 = d-k>.  Equals
// spin_operators(d) entrywise.
SpinOperators schwinger_spin(int d);

} // namespace blossomspin
