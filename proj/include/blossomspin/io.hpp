#pragma once

#include "blossomspin/bernstein.hpp"
#include "blossomspin/spin.hpp"

#include <string>

namespace blossomspin {

// Full-precision decimal rendering: 17 significant digits round-trip any
// double exactly, and printf-style formatting gives identical bytes across
// runs.  Machine outputs use this; human-facing text uses format_human.
std::string format_full(double x);
std::string format_human(double x); // 6 significant digits

// Curve file: {"degree": d, "points": [[x, y, ...], ...]} with exactly d+1
// equal-length rows.  Anything else throws std::invalid_argument with a
// description of the offense.
BezierCurve read_curve_json(const std::string& path);
std::string curve_to_json(const BezierCurve& curve);

// State file: {"d": d, "amplitudes": [[re, im], ...]} with exactly d+1 pairs.
SpinState read_state_json(const std::string& path);
std::string state_to_json(const SpinState& state);

// Star list: [{"theta": t, "phi": p} | {"infinity": true}, ...].
std::string stars_to_json(const StarConfiguration& cfg);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace blossomspin
