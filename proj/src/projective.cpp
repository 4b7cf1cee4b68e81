#include "blossomspin/projective.hpp"

#include "blossomspin/bernstein.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blossomspin {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

RiemannPoint RiemannPoint::canonical() const {
    const double n = std::sqrt(std::norm(z) + std::norm(w));
    if (n == 0.0 || !std::isfinite(n))
        throw std::invalid_argument("RiemannPoint: [0 : 0] is not a projective point");
    std::complex<double> uz = z / n, uw = w / n;
    const std::complex<double> lead = (std::abs(uz) > 1e-12) ? uz : uw;
    const std::complex<double> phase = lead / std::abs(lead);
    return {uz / phase, uw / phase};
}

SphereAngles stereographic_to_angles(const RiemannPoint& p) {
    const double az = std::abs(p.z), aw = std::abs(p.w);
    if (az == 0.0 && aw == 0.0)
        throw std::invalid_argument("stereographic_to_angles: [0 : 0]");
    const double theta = 2.0 * std::atan2(az, aw);
    if (az == 0.0 || aw == 0.0) return {theta, 0.0}; // phi undefined at a pole
    double phi = std::arg(p.z * std::conj(p.w));
    if (phi < 0.0) phi += 2.0 * pi;
    if (phi >= 2.0 * pi) phi = 0.0;
    return {theta, phi};
}

RiemannPoint angles_to_stereographic(const SphereAngles& a) {
    const double h = 0.5 * a.theta;
    const std::complex<double> ph(std::cos(a.phi), std::sin(a.phi));
    return {std::sin(h) * ph, std::cos(h)};
}

double angular_distance(const RiemannPoint& p, const RiemannPoint& q) {
    const double np = std::sqrt(std::norm(p.z) + std::norm(p.w));
    const double nq = std::sqrt(std::norm(q.z) + std::norm(q.w));
    if (np == 0.0 || nq == 0.0)
        throw std::invalid_argument("angular_distance: [0 : 0]");
    const double cross = std::abs(p.z * q.w - p.w * q.z) / (np * nq);
    return 2.0 * std::asin(std::min(1.0, cross));
}

Eigen::VectorXcd projective_canonical(Eigen::VectorXcd v) {
    const double n = v.norm();
    if (n == 0.0 || !std::isfinite(n))
        throw std::invalid_argument("projective_canonical: zero vector");
    v /= n;
    Eigen::Index lead = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12) { lead = i; break; }
    }
    if (lead < 0) lead = 0;
    const std::complex<double> phase = v(lead) / std::abs(v(lead));
    v /= phase;
    return v;
}

Eigen::VectorXcd veronese(int d, const RiemannPoint& p) {
    if (d < 1) throw std::invalid_argument("veronese: degree must be positive");
    const RiemannPoint c = p.canonical();
    Eigen::VectorXcd up(d + 1), vp(d + 1);
    up(0) = 1.0; vp(0) = 1.0;
    for (int j = 1; j <= d; ++j) {
        up(j) = up(j - 1) * c.z;
        vp(j) = vp(j - 1) * c.w;
    }
    Eigen::VectorXcd out(d + 1);
    for (int j = 0; j <= d; ++j)
        out(j) = binomial(d, j) * vp(d - j) * up(j);
    return projective_canonical(std::move(out));
}

RiemannPoint circle_action(const RiemannPoint& p, double phase) {
    if (p.z == std::complex<double>(0.0, 0.0) && p.w == std::complex<double>(0.0, 0.0))
        throw std::invalid_argument("circle_action: [0 : 0]");
    return {p.z * std::complex<double>(std::cos(phase), std::sin(phase)), p.w};
}

double algebraic_moment(int d, double t) {
    if (d < 0) throw std::invalid_argument("algebraic_moment: negative degree");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("algebraic_moment: t outside [0,1]");
    const Eigen::VectorXd b = bernstein_row(d, t);
    double m = 0.0;
    for (int i = 0; i <= d; ++i) m += i * b(i);
    return m;
}

namespace {

// Log-derivative data of S(rho) = sum_k C(d,k)^2 rho^k at rho in [0,1].
// Area density against d(theta) d(phi) is 2 (rho f'' + f') T T' with
// f = log S, T = tan(theta/2); the weights are palindromic, so the density
// is symmetric about theta = pi/2 and we only ever evaluate at rho <= 1.
double area_integrand(const Eigen::VectorXd& coef, double theta) {
    const int d = static_cast<int>(coef.size()) - 1;
    if (theta > pi / 2.0) theta = pi - theta;
    const double t = std::tan(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    const double tp = 0.5 / (c * c);
    const double rho = t * t;
    double s = 0.0, s1 = 0.0, s2 = 0.0;
    for (int k = d; k >= 0; --k) {
        s2 = s2 * rho + ((k >= 2) ? coef(k) * k * (k - 1.0) : 0.0);
        s1 = s1 * rho + ((k >= 1) ? coef(k) * k : 0.0);
        s = s * rho + coef(k);
    }
    // s2, s1 accumulated one/two powers high; divide back
    if (d >= 1) s1 = (rho > 0.0) ? s1 / rho : coef(1);
    if (d >= 2) s2 = (rho > 0.0) ? s2 / (rho * rho) : 2.0 * coef(2);
    const double val = (rho * (s2 * s - s1 * s1) + s1 * s) / (s * s);
    return 2.0 * val * t * tp;
}

double midpoint_sum(const Eigen::VectorXd& coef, long n) {
    const double h = pi / static_cast<double>(n);
    double acc = 0.0;
    for (long i = 0; i < n; ++i)
        acc += area_integrand(coef, (static_cast<double>(i) + 0.5) * h);
    // the phi factor of the product grid sums exactly to 2*pi
    return acc * h * 2.0 * pi;
}

} // namespace

double fubini_study_pullback_area(int d, long samples) {
    if (d < 1) throw std::invalid_argument("fubini_study_pullback_area: degree must be positive");
    if (samples < 10000)
        throw std::invalid_argument("fubini_study_pullback_area: fewer than 10000 samples");
    Eigen::VectorXd coef(d + 1);
    for (int k = 0; k <= d; ++k) {
        const double b = binomial(d, k);
        coef(k) = b * b;
    }
    long n = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(samples))));
    double coarse = midpoint_sum(coef, n);
    double fine = midpoint_sum(coef, 2 * n);
    double prev = (4.0 * fine - coarse) / 3.0;
    for (int stage = 0; stage < 8; ++stage) {
        n *= 2;
        coarse = fine;
        fine = midpoint_sum(coef, 2 * n);
        const double next = (4.0 * fine - coarse) / 3.0;
        if (std::abs(next - prev) < 1e-6) return next;
        prev = next;
    }
    throw std::runtime_error("fubini_study_pullback_area: quadrature did not converge");
}

} // namespace blossomspin
