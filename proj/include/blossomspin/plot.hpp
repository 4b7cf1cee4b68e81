#pragma once

#include "blossomspin/bernstein.hpp"
#include "blossomspin/classical.hpp"
#include "blossomspin/spin.hpp"

#include <string>
#include <vector>

namespace blossomspin {

// All emitters return complete file contents.  Every number is rendered with
// 17 significant digits: the SVG carries raw library values (curve geometry
// lives in a transformed group, sample data rides in data-* attributes), so
// plots are as checkable as the CSV twins.

std::string plot_basis_svg(int d, int samples = 201);
std::string plot_basis_csv(int d, int samples = 201);

// First two coordinates are drawn; higher-dimensional curves still sample
// correctly into CSV.
std::string plot_curve_svg(const BezierCurve& curve, int samples = 201);
std::string plot_curve_csv(const BezierCurve& curve, int samples = 201);

// Front/back polar disks around the two poles; stars at infinity sit at the
// center of the back disk.
std::string plot_stars_svg(const StarConfiguration& cfg);
std::string plot_stars_csv(const StarConfiguration& cfg); // theta,phi,at_infinity

std::string plot_distribution_svg(const SpinState& state);
std::string plot_distribution_csv(const SpinState& state); // k,probability

std::string plot_precession_svg(const std::vector<GyroSample>& track);
std::string plot_precession_csv(const std::vector<GyroSample>& track,
                                const Eigen::Vector3d& torque); // step,Lx,Ly,Lz,H

std::string plot_flow_svg(const std::vector<PhaseSample>& track);
std::string plot_flow_csv(const std::vector<PhaseSample>& track); // step,q,p,H

} // namespace blossomspin
