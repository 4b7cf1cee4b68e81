#include "blossomspin/classical.hpp"

#include "blossomspin/spin.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blossomspin {

namespace {

Eigen::Vector2d flow_field(const Hamiltonian2D& h, double q, double p) {
    const Eigen::Vector2d g = h.gradient(q, p);
    return {-g(1), g(0)};
}

void check_finite(double q, double p) {
    if (!std::isfinite(q) || !std::isfinite(p))
        throw std::runtime_error("hamiltonian_flow_2d: state left the finite range");
}

} // namespace

std::vector<PhaseSample> hamiltonian_flow_2d(const Hamiltonian2D& h, double q0, double p0,
                                             double dt, long steps, long stride) {
    if (!h.value || !h.gradient)
        throw std::invalid_argument("hamiltonian_flow_2d: missing value or gradient");
    if (steps < 0 || stride < 1 || !(dt > 0.0))
        throw std::invalid_argument("hamiltonian_flow_2d: bad step parameters");
    std::vector<PhaseSample> out;
    out.reserve(static_cast<std::size_t>(steps / stride) + 1);
    double q = q0, p = p0;
    check_finite(q, p);
    out.push_back({0, q, p, h.value(q, p)});
    for (long s = 1; s <= steps; ++s) {
        const Eigen::Vector2d k1 = flow_field(h, q, p);
        const Eigen::Vector2d k2 = flow_field(h, q + 0.5 * dt * k1(0), p + 0.5 * dt * k1(1));
        const Eigen::Vector2d k3 = flow_field(h, q + 0.5 * dt * k2(0), p + 0.5 * dt * k2(1));
        const Eigen::Vector2d k4 = flow_field(h, q + dt * k3(0), p + dt * k3(1));
        q += dt / 6.0 * (k1(0) + 2.0 * k2(0) + 2.0 * k3(0) + k4(0));
        p += dt / 6.0 * (k1(1) + 2.0 * k2(1) + 2.0 * k3(1) + k4(1));
        check_finite(q, p);
        if (s % stride == 0 || s == steps)
            out.push_back({s, q, p, h.value(q, p)});
    }
    return out;
}

namespace {

// one exact rotation step about the torque axis (Rodrigues)
Eigen::Vector3d rotate_about(const Eigen::Vector3d& l, const Eigen::Vector3d& axis,
                             double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return l * c + axis.cross(l) * s + axis * (axis.dot(l)) * (1.0 - c);
}

Eigen::Vector3d rk4_precession_step(const Eigen::Vector3d& l, const Eigen::Vector3d& t,
                                    double dt) {
    const Eigen::Vector3d k1 = t.cross(l);
    const Eigen::Vector3d k2 = t.cross(l + 0.5 * dt * k1);
    const Eigen::Vector3d k3 = t.cross(l + 0.5 * dt * k2);
    const Eigen::Vector3d k4 = t.cross(l + dt * k3);
    return l + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

std::vector<GyroSample> precess(const Eigen::Vector3d& l0, const Eigen::Vector3d& torque,
                                double dt, long steps, bool exact, long stride) {
    if (steps < 0 || stride < 1 || !(dt > 0.0))
        throw std::invalid_argument("precess: bad step parameters");
    const double tn = torque.norm();
    const Eigen::Vector3d axis = (tn > 0.0) ? Eigen::Vector3d(torque / tn)
                                            : Eigen::Vector3d::UnitZ();
    const double angle = tn * dt; // zero torque rotates by nothing
    std::vector<GyroSample> out;
    out.reserve(static_cast<std::size_t>(steps / stride) + 1);
    Eigen::Vector3d l = l0;
    out.push_back({0, l, l.dot(torque)});
    for (long s = 1; s <= steps; ++s) {
        l = exact ? rotate_about(l, axis, angle) : rk4_precession_step(l, torque, dt);
        if (s % stride == 0 || s == steps)
            out.push_back({s, l, l.dot(torque)});
    }
    return out;
}

ConservationDrift precession_drift(const Eigen::Vector3d& l0, const Eigen::Vector3d& torque,
                                   double dt, long steps, bool exact) {
    if (steps < 0 || !(dt > 0.0))
        throw std::invalid_argument("precession_drift: bad step parameters");
    const double tn = torque.norm();
    const Eigen::Vector3d axis = (tn > 0.0) ? Eigen::Vector3d(torque / tn)
                                            : Eigen::Vector3d::UnitZ();
    const double angle = tn * dt;
    const double norm0 = l0.norm();
    const double energy0 = l0.dot(torque);
    Eigen::Vector3d l = l0;
    ConservationDrift drift;
    for (long s = 1; s <= steps; ++s) {
        l = exact ? rotate_about(l, axis, angle) : rk4_precession_step(l, torque, dt);
        drift.max_norm_drift = std::max(drift.max_norm_drift, std::abs(l.norm() - norm0));
        drift.max_energy_drift =
            std::max(drift.max_energy_drift, std::abs(l.dot(torque) - energy0));
    }
    return drift;
}

MomentMapReport moment_map_report(int d, int grid_points) {
    if (d < 1) throw std::invalid_argument("moment_map_report: degree must be positive");
    if (grid_points < 2) throw std::invalid_argument("moment_map_report: need >= 2 grid points");
    const Eigen::MatrixXcd jz = spin_operators(d).jz;
    MomentMapReport rep;
    rep.rows.reserve(grid_points);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double theta =
            std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const SpinState s = coherent_state(d, {theta, 0.0});
        MomentMapRow row;
        row.theta = theta;
        row.quantum_jz = expectation(s, jz);
        row.classical_lz = 0.5 * d * std::cos(theta);
        rep.rows.push_back(row);
        rep.max_abs_difference =
            std::max(rep.max_abs_difference, std::abs(row.quantum_jz - row.classical_lz));
        num += row.quantum_jz * std::cos(theta);
        den += std::cos(theta) * std::cos(theta);
    }
    rep.fitted_constant = num / den;
    return rep;
}

} // namespace blossomspin
