#include "blossomspin/plot.hpp"

#include "blossomspin/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blossomspin {

namespace {

constexpr double pi = std::numbers::pi;

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string svg_open(int w, int h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
           " " + std::to_string(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

struct Frame {
    double sx, sy, tx, ty; // viewport = (sx*x + tx, sy*y + ty)

    std::string matrix() const {
        return "matrix(" + format_full(sx) + " 0 0 " + format_full(sy) + " " +
               format_full(tx) + " " + format_full(ty) + ")";
    }
    double px(double x) const { return sx * x + tx; }
    double py(double y) const { return sy * y + ty; }
};

// maps the data box to the viewport with margins, y up
Frame fit(double x0, double x1, double y0, double y1, int w, int h, double margin) {
    if (x1 <= x0) { x0 -= 0.5; x1 += 0.5; }
    if (y1 <= y0) { y0 -= 0.5; y1 += 0.5; }
    Frame f;
    f.sx = (w - 2.0 * margin) / (x1 - x0);
    f.sy = -(h - 2.0 * margin) / (y1 - y0);
    f.tx = margin - f.sx * x0;
    f.ty = h - margin - f.sy * y0;
    return f;
}

std::string polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                     const char* color) {
    std::string s = "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += " ";
        s += format_full(xs[i]) + "," + format_full(ys[i]);
    }
    return s + "\"/>\n";
}

std::string text_at(double x, double y, const std::string& label, const char* anchor) {
    return "<text x=\"" + format_full(x) + "\" y=\"" + format_full(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" + anchor +
           "\">" + label + "</text>\n";
}

} // namespace

std::string plot_basis_csv(int d, int samples) {
    if (d < 0 || samples < 2) throw std::invalid_argument("plot_basis_csv: bad parameters");
    std::string out = "t";
    for (int i = 0; i <= d; ++i) out += ",b" + std::to_string(i);
    out += "\n";
    for (int s = 0; s < samples; ++s) {
        const double t = static_cast<double>(s) / (samples - 1);
        const Eigen::VectorXd row = bernstein_row(d, t);
        out += format_full(t);
        for (int i = 0; i <= d; ++i) out += "," + format_full(row(i));
        out += "\n";
    }
    return out;
}

std::string plot_basis_svg(int d, int samples) {
    if (d < 0 || samples < 2) throw std::invalid_argument("plot_basis_svg: bad parameters");
    const int w = 640, h = 480;
    const Frame f = fit(0.0, 1.0, 0.0, 1.0, w, h, 40.0);
    std::string out = svg_open(w, h);
    out += "<g transform=\"" + f.matrix() + "\">\n";
    std::vector<std::vector<double>> ys(d + 1, std::vector<double>(samples));
    std::vector<double> xs(samples);
    for (int s = 0; s < samples; ++s) {
        const double t = static_cast<double>(s) / (samples - 1);
        xs[s] = t;
        const Eigen::VectorXd row = bernstein_row(d, t);
        for (int i = 0; i <= d; ++i) ys[i][s] = row(i);
    }
    for (int i = 0; i <= d; ++i)
        out += polyline(xs, ys[i], palette[i % 8]);
    out += "</g>\n";
    out += text_at(w / 2.0, 20.0, "Bernstein basis, degree " + std::to_string(d), "middle");
    out += text_at(f.px(0.0), h - 8.0, "t = 0", "start");
    out += text_at(f.px(1.0), h - 8.0, "t = 1", "end");
    return out + "</svg>\n";
}

std::string plot_curve_csv(const BezierCurve& curve, int samples) {
    if (samples < 2) throw std::invalid_argument("plot_curve_csv: bad parameters");
    std::string out = "t";
    for (int c = 0; c < curve.dimension(); ++c) out += ",x" + std::to_string(c);
    out += "\n";
    for (int s = 0; s < samples; ++s) {
        const double t = static_cast<double>(s) / (samples - 1);
        const Eigen::RowVectorXd p = evaluate(curve, t);
        out += format_full(t);
        for (int c = 0; c < curve.dimension(); ++c) out += "," + format_full(p(c));
        out += "\n";
    }
    return out;
}

std::string plot_curve_svg(const BezierCurve& curve, int samples) {
    if (samples < 2) throw std::invalid_argument("plot_curve_svg: bad parameters");
    if (curve.dimension() < 2)
        throw std::invalid_argument("plot_curve_svg: need at least two coordinates");
    const int w = 640, h = 480;
    std::vector<double> cx(samples), cy(samples);
    for (int s = 0; s < samples; ++s) {
        const Eigen::RowVectorXd p = evaluate(curve, static_cast<double>(s) / (samples - 1));
        cx[s] = p(0);
        cy[s] = p(1);
    }
    double x0 = curve.points.col(0).minCoeff(), x1 = curve.points.col(0).maxCoeff();
    double y0 = curve.points.col(1).minCoeff(), y1 = curve.points.col(1).maxCoeff();
    x0 = std::min(x0, *std::min_element(cx.begin(), cx.end()));
    x1 = std::max(x1, *std::max_element(cx.begin(), cx.end()));
    y0 = std::min(y0, *std::min_element(cy.begin(), cy.end()));
    y1 = std::max(y1, *std::max_element(cy.begin(), cy.end()));
    const Frame f = fit(x0, x1, y0, y1, w, h, 50.0);

    const int d = curve.degree();
    std::vector<double> px(d + 1), py(d + 1);
    for (int i = 0; i <= d; ++i) { px[i] = curve.points(i, 0); py[i] = curve.points(i, 1); }

    std::string out = svg_open(w, h);
    out += "<g transform=\"" + f.matrix() + "\">\n";
    out += polyline(px, py, "#bbbbbb");
    out += polyline(cx, cy, "#1f77b4");
    out += "</g>\n";
    for (int i = 0; i <= d; ++i) {
        out += "<circle cx=\"" + format_full(f.px(px[i])) + "\" cy=\"" +
               format_full(f.py(py[i])) + "\" r=\"3.5\" fill=\"#d62728\" data-x=\"" +
               format_full(px[i]) + "\" data-y=\"" + format_full(py[i]) + "\"/>\n";
        out += text_at(f.px(px[i]) + 6.0, f.py(py[i]) - 6.0, polar_point_label(d, i), "start");
    }
    out += text_at(w / 2.0, 20.0, "Bezier curve, degree " + std::to_string(d), "middle");
    return out + "</svg>\n";
}

std::string plot_stars_csv(const StarConfiguration& cfg) {
    std::string out = "theta,phi,at_infinity\n";
    for (const RiemannPoint& p : cfg.stars) {
        if (p.at_infinity()) {
            out += format_full(pi) + "," + format_full(0.0) + ",1\n";
        } else {
            const SphereAngles a = stereographic_to_angles(p);
            out += format_full(a.theta) + "," + format_full(a.phi) + ",0\n";
        }
    }
    return out;
}

std::string plot_stars_svg(const StarConfiguration& cfg) {
    const int w = 880, h = 480;
    const double r = 190.0;
    const double cx_front = 230.0, cx_back = 650.0, cy = 250.0;
    std::string out = svg_open(w, h);
    out += "<circle cx=\"" + format_full(cx_front) + "\" cy=\"" + format_full(cy) +
           "\" r=\"" + format_full(r) + "\" fill=\"none\" stroke=\"#999999\"/>\n";
    out += "<circle cx=\"" + format_full(cx_back) + "\" cy=\"" + format_full(cy) +
           "\" r=\"" + format_full(r) + "\" fill=\"none\" stroke=\"#999999\"/>\n";
    out += text_at(cx_front, 30.0, "hemisphere around theta = 0", "middle");
    out += text_at(cx_back, 30.0, "hemisphere around theta = pi", "middle");
    for (const RiemannPoint& p : cfg.stars) {
        double theta = pi, phi = 0.0;
        bool infinite = p.at_infinity();
        if (!infinite) {
            const SphereAngles a = stereographic_to_angles(p);
            theta = a.theta;
            phi = a.phi;
        }
        const bool front = theta <= pi / 2.0;
        const double rr = (front ? theta : pi - theta) / (pi / 2.0) * r;
        const double cx = front ? cx_front : cx_back;
        const double x = cx + rr * std::cos(phi);
        const double y = cy - rr * std::sin(phi);
        out += "<circle cx=\"" + format_full(x) + "\" cy=\"" + format_full(y) +
               "\" r=\"5\" fill=\"#1f77b4\" fill-opacity=\"0.55\" stroke=\"#1f77b4\"";
        if (infinite)
            out += " data-infinity=\"true\"";
        else
            out += " data-theta=\"" + format_full(theta) + "\" data-phi=\"" +
                   format_full(phi) + "\"";
        out += "/>\n";
    }
    out += text_at(w / 2.0, h - 12.0,
                   std::to_string(cfg.stars.size()) + " stars, degree " +
                       std::to_string(cfg.d), "middle");
    return out + "</svg>\n";
}

std::string plot_distribution_csv(const SpinState& state) {
    const Eigen::VectorXd p = measure_distribution(state);
    std::string out = "k,probability\n";
    for (Eigen::Index k = 0; k < p.size(); ++k)
        out += std::to_string(k) + "," + format_full(p(k)) + "\n";
    return out;
}

std::string plot_distribution_svg(const SpinState& state) {
    const Eigen::VectorXd p = measure_distribution(state);
    const int d = state.d();
    const int w = 640, h = 480;
    const double top = std::max(p.maxCoeff(), 1e-12);
    const Frame f = fit(-0.5, d + 0.5, 0.0, top, w, h, 50.0);
    std::string out = svg_open(w, h);
    out += "<g transform=\"" + f.matrix() + "\">\n";
    for (int k = 0; k <= d; ++k) {
        // rect in data coordinates; the frame transform carries it over
        out += "<rect x=\"" + format_full(k - 0.4) + "\" y=\"" + format_full(0.0) +
               "\" width=\"0.8\" height=\"" + format_full(p(k)) +
               "\" fill=\"#1f77b4\" fill-opacity=\"0.8\" data-k=\"" + std::to_string(k) +
               "\" data-probability=\"" + format_full(p(k)) + "\"/>\n";
    }
    out += "</g>\n";
    // the frame flips y, so rects drawn upward from 0 land right side up
    for (int k = 0; k <= d; ++k)
        out += text_at(f.px(k), h - 30.0, std::to_string(k), "middle");
    out += text_at(w / 2.0, 20.0, "measurement distribution, degree " + std::to_string(d),
                   "middle");
    return out + "</svg>\n";
}

std::string plot_precession_csv(const std::vector<GyroSample>& track,
                                const Eigen::Vector3d& torque) {
    (void)torque; // energy is already sampled alongside each state
    std::string out = "step,Lx,Ly,Lz,H\n";
    for (const GyroSample& g : track)
        out += std::to_string(g.step) + "," + format_full(g.l(0)) + "," +
               format_full(g.l(1)) + "," + format_full(g.l(2)) + "," +
               format_full(g.energy) + "\n";
    return out;
}

std::string plot_precession_svg(const std::vector<GyroSample>& track) {
    if (track.empty()) throw std::invalid_argument("plot_precession_svg: empty trajectory");
    const int w = 640, h = 480;
    // oblique projection u = Lx - 0.35 Ly, v = Lz - 0.18 Ly
    std::vector<double> us(track.size()), vs(track.size());
    for (std::size_t i = 0; i < track.size(); ++i) {
        us[i] = track[i].l(0) - 0.35 * track[i].l(1);
        vs[i] = track[i].l(2) - 0.18 * track[i].l(1);
    }
    const double u0 = *std::min_element(us.begin(), us.end());
    const double u1 = *std::max_element(us.begin(), us.end());
    const double v0 = *std::min_element(vs.begin(), vs.end());
    const double v1 = *std::max_element(vs.begin(), vs.end());
    const Frame f = fit(u0, u1, v0, v1, w, h, 60.0);
    std::string out = svg_open(w, h);
    out += "<g transform=\"" + f.matrix() + "\">\n";
    out += polyline(us, vs, "#1f77b4");
    out += "</g>\n";
    const GyroSample& last = track.back();
    out += "<circle cx=\"" + format_full(f.px(us.back())) + "\" cy=\"" +
           format_full(f.py(vs.back())) + "\" r=\"4\" fill=\"#d62728\" data-lx=\"" +
           format_full(last.l(0)) + "\" data-ly=\"" + format_full(last.l(1)) +
           "\" data-lz=\"" + format_full(last.l(2)) + "\"/>\n";
    out += text_at(w / 2.0, 20.0, "precession trajectory, " +
                       std::to_string(track.back().step) + " steps", "middle");
    return out + "</svg>\n";
}

std::string plot_flow_csv(const std::vector<PhaseSample>& track) {
    std::string out = "step,q,p,H\n";
    for (const PhaseSample& s : track)
        out += std::to_string(s.step) + "," + format_full(s.q) + "," + format_full(s.p) +
               "," + format_full(s.energy) + "\n";
    return out;
}

std::string plot_flow_svg(const std::vector<PhaseSample>& track) {
    if (track.empty()) throw std::invalid_argument("plot_flow_svg: empty trajectory");
    const int w = 640, h = 480;
    std::vector<double> qs(track.size()), ps(track.size());
    for (std::size_t i = 0; i < track.size(); ++i) { qs[i] = track[i].q; ps[i] = track[i].p; }
    const double q0 = *std::min_element(qs.begin(), qs.end());
    const double q1 = *std::max_element(qs.begin(), qs.end());
    const double p0 = *std::min_element(ps.begin(), ps.end());
    const double p1 = *std::max_element(ps.begin(), ps.end());
    const Frame f = fit(q0, q1, p0, p1, w, h, 60.0);
    std::string out = svg_open(w, h);
    out += "<g transform=\"" + f.matrix() + "\">\n";
    out += polyline(qs, ps, "#2ca02c");
    out += "</g>\n";
    out += text_at(w / 2.0, 20.0, "phase portrait, " + std::to_string(track.back().step) +
                       " steps", "middle");
    out += text_at(f.px(qs[0]) + 6.0, f.py(ps[0]), "start", "start");
    return out + "</svg>\n";
}

} // namespace blossomspin
