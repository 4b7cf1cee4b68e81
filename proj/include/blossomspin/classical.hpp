#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

namespace blossomspin {

// Planar Hamiltonian given by value and gradient (dH/dq, dH/dp).
struct Hamiltonian2D {
    std::function<double(double, double)> value;
    std::function<Eigen::Vector2d(double, double)> gradient;
};

struct PhaseSample {
    long step = 0;
    double q = 0.0, p = 0.0, energy = 0.0;
};

// Integrates (q_dot, p_dot) = (-dH/dp, +dH/dq) with classical RK4, sampling
// every `stride` steps (step 0 included).  With H = (p^2 + q^2)/2 the motion
// from (1, 0) runs through (cos t, sin t).  Non-finite states abort.
std::vector<PhaseSample> hamiltonian_flow_2d(const Hamiltonian2D& h, double q0, double p0,
                                             double dt, long steps, long stride = 1);

struct GyroSample {
    long step = 0;
    Eigen::Vector3d l = Eigen::Vector3d::Zero();
    double energy = 0.0; // L . T
};

// Fixed-axis precession dL/dt = T x L.  `exact` rotates L by angle |T| dt
// about T each step (machine-precision conservation); otherwise RK4 on the
// cross-product field.  Zero torque is legal and leaves L constant.
std::vector<GyroSample> precess(const Eigen::Vector3d& l0, const Eigen::Vector3d& torque,
                                double dt, long steps, bool exact = true, long stride = 1);

struct ConservationDrift {
    double max_norm_drift = 0.0;   // max | |L(t)| - |L(0)| |
    double max_energy_drift = 0.0; // max | L(t).T - L(0).T |
};

// Same integrators without storing the trajectory; used for long-run
// conservation checks.
ConservationDrift precession_drift(const Eigen::Vector3d& l0, const Eigen::Vector3d& torque,
                                   double dt, long steps, bool exact);

struct MomentMapRow {
    double theta = 0.0;
    double quantum_jz = 0.0;   // <Jz> in the coherent state at theta
    double classical_lz = 0.0; // (d/2) cos(theta)
};

struct MomentMapReport {
    std::vector<MomentMapRow> rows;
    double max_abs_difference = 0.0;
    double fitted_constant = 0.0; // least-squares c in <Jz> = c cos(theta)
};

// Tabulates <Jz> against (d/2) cos(theta) on a uniform theta grid over
// [0, pi] (endpoints included).
MomentMapReport moment_map_report(int d, int grid_points);

} // namespace blossomspin
