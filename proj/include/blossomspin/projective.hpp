#pragma once

#include <Eigen/Core>
#include <complex>

namespace blossomspin {

// Point of the projective line as a homogeneous pair [z : w], never both
// zero.  w = 0 is the point at infinity; finite points correspond to the
// ratio z/w.
struct RiemannPoint {
    std::complex<double> z;
    std::complex<double> w;

    static RiemannPoint from_ratio(std::complex<double> r) { return {r, 1.0}; }
    static RiemannPoint infinity() { return {1.0, 0.0}; }

    bool at_infinity() const { return w == std::complex<double>(0.0, 0.0); }

    // Unit-norm representative with the first entry of magnitude > 1e-12 made
    // real positive.  Idempotent; equal projective points map to equal pairs.
    RiemannPoint canonical() const;
};

struct SphereAngles {
    double theta; // [0, pi]; 0 is the pole rendered at ratio 0
    double phi;   // [0, 2*pi); 0 at either pole
};

// theta = 2*atan(|z/w|), phi = arg(z/w).  The pole map: ratio 0 -> theta 0,
// infinity -> theta pi.
SphereAngles stereographic_to_angles(const RiemannPoint& p);

// Inverse: [sin(theta/2) e^{i phi} : cos(theta/2)], so the ratio is
// tan(theta/2) e^{i phi}.
RiemannPoint angles_to_stereographic(const SphereAngles& a);

// Geodesic angle between the sphere images of two projective points, in
// [0, pi].  Zero iff the points coincide projectively.
double angular_distance(const RiemannPoint& p, const RiemannPoint& q);

// Scale-free representative of a nonzero vector in C^{n}: unit norm, first
// entry of magnitude > 1e-12 * ||v|| rotated real positive.
Eigen::VectorXcd projective_canonical(Eigen::VectorXcd v);

// Degree-d Veronese image [C(d,0) u^d : C(d,1) u^{d-1} v : ... : C(d,d) v^d]
// of [u : v], returned in canonical form.  The j-th entry carries circle
// weight j (see circle_action).
Eigen::VectorXcd veronese(int d, const RiemannPoint& p);

// Rotation about the pole axis: [z : w] -> [e^{i phase} z : w].
RiemannPoint circle_action(const RiemannPoint& p, double phase);

// sum_i i * beta_i^d(t) = d*t, the mean of the Bernstein weights at t.
// Defined for t in [0,1].
double algebraic_moment(int d, double t);

// Total area of the degree-d Veronese image of the sphere in the ambient
// projective space, with the Fubini-Study form normalized so that d = 1
// gives 2*pi.  `samples` lower-bounds the initial product-grid size
// (>= 10000); the grid is refined with Richardson extrapolation until two
// successive estimates agree to 1e-6, else this throws.
double fubini_study_pullback_area(int d, long samples = 10000);

} // namespace blossomspin
