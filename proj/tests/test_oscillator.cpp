#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blossomspin/oscillator.hpp"
#include "blossomspin/rng.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>

using namespace blossomspin;
using cplx = std::complex<double>;

TEST_CASE("ladder matrices act on number states") {
    const LadderOperators l = ladder_operators(6);
    // number operator is exactly diag(0..N)
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(std::abs(l.number(n, m) - (n == m ? n : 0.0)) == 0.0);
    // and the product form reproduces it to rounding
    CHECK((l.raise * l.lower - l.number).cwiseAbs().maxCoeff() < 1e-14);
    // raise |n> = sqrt(n+1)|n+1>
    Eigen::VectorXcd e2 = Eigen::VectorXcd::Zero(7);
    e2(2) = 1.0;
    const Eigen::VectorXcd up = l.raise * e2;
    CHECK(std::abs(up(3) - std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(up.norm() - std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("commutator bends only at the cutoff corner") {
    for (const int cutoff : {3, 9, 25}) {
        const LadderOperators l = ladder_operators(cutoff);
        const Eigen::MatrixXcd comm = l.lower * l.raise - l.raise * l.lower;
        for (int n = 0; n <= cutoff; ++n) {
            for (int m = 0; m <= cutoff; ++m) {
                const double expect =
                    (n == m) ? (n == cutoff ? -static_cast<double>(cutoff) : 1.0) : 0.0;
                CHECK(std::abs(comm(n, m) - expect) < 1e-13);
            }
        }
    }
}

TEST_CASE("quadratic hamiltonian spectrum below the cutoff shoulder") {
    const int cutoff = 40;
    const LadderOperators l = ladder_operators(cutoff);
    const double r2 = std::sqrt(2.0);
    const Eigen::MatrixXcd x = (l.lower + l.raise) / r2;
    const Eigen::MatrixXcd p = cplx(0.0, 1.0) * (l.raise - l.lower) / r2;
    const Eigen::MatrixXcd h = 0.5 * (x * x + p * p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    REQUIRE(es.info() == Eigen::Success);
    const Eigen::VectorXd ev = es.eigenvalues();
    // truncation corrupts one eigenvalue (the deleted aa^dag corner), which
    // sorts into the middle; match each expected level to the nearest
    // computed one instead of trusting positions
    for (int n = 0; n <= cutoff - 5; ++n) {
        double best = 1e300;
        for (int i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev(i) - (n + 0.5)));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("coherent state occupation follows the Poisson law") {
    for (const double z : {0.5, 1.0, 2.0, 4.0}) {
        const int cutoff = coherent_cutoff(z);
        const FockState f = oscillator_coherent(z, cutoff);
        const double lambda = z * z;
        const Eigen::VectorXd p = f.amplitudes.cwiseAbs2() / f.amplitudes.squaredNorm();
        double tv = 0.0, qsum = 0.0;
        std::vector<double> q(cutoff + 1);
        for (int n = 0; n <= cutoff; ++n) {
            q[n] = oracles::poisson_pmf(n, lambda);
            qsum += q[n];
        }
        for (int n = 0; n <= cutoff; ++n) tv += std::abs(p(n) - q[n] / qsum);
        CHECK(0.5 * tv < 1e-10);
        // mean occupation
        double mean = 0.0;
        for (int n = 0; n <= cutoff; ++n) mean += n * p(n);
        CHECK(mean == doctest::Approx(lambda).epsilon(1e-10));
    }
}

TEST_CASE("mean parameterization is the square root map") {
    const FockState a = oscillator_coherent(1.5, 60);
    const FockState b = oscillator_coherent_mean(2.25, 60);
    CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("undersized cutoffs are refused") {
    CHECK_THROWS_AS(oscillator_coherent(4.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(oscillator_coherent(-1.0, 60), std::invalid_argument);
    CHECK_NOTHROW(oscillator_coherent(4.0, coherent_cutoff(4.0)));
}

TEST_CASE("sector basis lists total quanta splits in polar order") {
    const auto basis = sector_basis(3);
    REQUIRE(basis.size() == 4);
    CHECK(basis[0] == std::make_pair(3, 0));
    CHECK(basis[1] == std::make_pair(2, 1));
    CHECK(basis[3] == std::make_pair(0, 3));
}

TEST_CASE("two-oscillator sector reproduces the spin matrices") {
    for (int d : {1, 2, 5, 12}) {
        const SpinOperators sw = schwinger_spin(d);
        const SpinOperators sp = spin_operators(d);
        CHECK((sw.jplus - sp.jplus).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((sw.jminus - sp.jminus).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((sw.jz - sp.jz).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((sw.jx - sp.jx).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((sw.jy - sp.jy).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::MatrixXcd comm =
            sw.jplus * sw.jminus - sw.jminus * sw.jplus - 2.0 * sw.jz;
        CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("two independent Poisson modes slice to a binomial law") {
    // product coherent state, restricted to the total-quanta-d sector,
    // must weight k ups by the Bernstein value at z1^2/(z1^2+z2^2)
    const double z1 = 1.3, z2 = 0.8;
    const int d = 9;
    const int cutoff = std::max(coherent_cutoff(z1), coherent_cutoff(z2));
    const FockState f1 = oscillator_coherent(z1, cutoff);
    const FockState f2 = oscillator_coherent(z2, cutoff);
    Eigen::VectorXd sector(d + 1);
    for (int k = 0; k <= d; ++k) {
        // k quanta in mode 1, d-k in mode 2 carries spin index k
        const cplx amp = f1.amplitudes(k) * f2.amplitudes(d - k);
        sector(k) = std::norm(amp);
    }
    sector /= sector.sum();
    const double t = z1 * z1 / (z1 * z1 + z2 * z2);
    for (int k = 0; k <= d; ++k)
        CHECK(std::abs(sector(k) - oracles::direct_bernstein(d, k, t)) < 1e-12);
}
