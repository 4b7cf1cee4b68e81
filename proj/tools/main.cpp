#include "blossomspin/bernstein.hpp"
#include "blossomspin/classical.hpp"
#include "blossomspin/io.hpp"
#include "blossomspin/plot.hpp"
#include "blossomspin/report.hpp"
#include "blossomspin/spin.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

namespace {

using namespace blossomspin;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

int run_eval(const std::string& curve_file, double t, bool json, const std::string& out) {
    const BezierCurve curve = read_curve_json(curve_file);
    const Eigen::RowVectorXd p = evaluate(curve, t);
    std::string s;
    if (json) {
        s = "[";
        for (int c = 0; c < p.size(); ++c) s += (c ? ", " : "") + format_full(p(c));
        s += "]\n";
    } else {
        for (int c = 0; c < p.size(); ++c) s += (c ? " " : "") + format_full(p(c));
        s += "\n";
    }
    emit(s, out);
    return 0;
}

int run_report(int degree, std::uint64_t seed, const std::string& tolerance_flag,
               bool text, const std::string& out) {
    std::map<std::string, double> tol;
    const char* env = std::getenv("BLOSSOMSPIN_TOLERANCES");
    const std::string tol_path = (env && *env) ? std::string(env) : tolerance_flag;
    tol = tol_path.empty() ? default_tolerances() : load_tolerances(tol_path);

    Report rep;
    try {
        rep = blossomspin::run_report(degree, seed, tol);
    } catch (const std::exception& e) {
        std::cerr << "check error: " << e.what() << "\n";
        return 3;
    }
    emit(text ? report_to_text(rep) : report_to_json(rep), out);
    return rep.all_passed() ? 0 : 1;
}

SpinState state_from_options(const std::string& state_file, int d, double theta, double phi,
                             bool have_angles) {
    if (!state_file.empty()) return read_state_json(state_file);
    if (have_angles) return coherent_state(d, {theta, phi});
    throw std::invalid_argument("need --state FILE or --theta (with -d)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein/Bezier curve machinery and the spin, oscillator and precession\n"
                 "systems it mirrors; 'report' runs the numeric verification suite."};
    app.require_subcommand(1);

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a curve file at a parameter");
    std::string eval_curve, eval_out;
    double eval_t = 0.0;
    bool eval_json = false;
    cmd_eval->add_option("curve", eval_curve, "curve JSON file")->required();
    cmd_eval->add_option("t", eval_t, "parameter value")->required();
    cmd_eval->add_flag("--json", eval_json, "emit a JSON array");
    cmd_eval->add_option("--out", eval_out, "write to file instead of stdout");

    // report
    auto* cmd_report = app.add_subcommand("report", "run all verification checks");
    int rep_degree = 4;
    std::uint64_t rep_seed = 0;
    std::string rep_tol, rep_out;
    bool rep_text = false;
    cmd_report->add_option("-d,--degree", rep_degree, "degree for degree-dependent checks")
        ->check(CLI::Range(1, 1000000));
    cmd_report->add_option("--seed", rep_seed, "seed for randomized checks");
    cmd_report->add_option("--tolerance-file", rep_tol,
                           "JSON object overriding per-check tolerances "
                           "(BLOSSOMSPIN_TOLERANCES wins over this flag)");
    cmd_report->add_flag("--text", rep_text, "human-readable rendering");
    cmd_report->add_option("--out", rep_out, "write to file instead of stdout");

    // plot
    auto* cmd_plot = app.add_subcommand("plot", "emit an SVG (or CSV) figure");
    std::string plot_kind, plot_curve, plot_state, plot_out;
    int plot_degree = 4, plot_samples = 201;
    long plot_steps = 10000, plot_stride = 0;
    double plot_theta = 0.0, plot_phi = 0.0, plot_dt = 1e-3;
    bool plot_csv = false, plot_have_theta = false;
    cmd_plot->add_option("kind", plot_kind,
                         "one of: basis, curve, stars, distribution, precession, flow")
        ->required();
    cmd_plot->add_option("-d,--degree", plot_degree)->check(CLI::Range(0, 60));
    cmd_plot->add_option("--samples", plot_samples)->check(CLI::Range(2, 100000));
    cmd_plot->add_option("--curve", plot_curve, "curve JSON file (kind=curve)");
    cmd_plot->add_option("--state", plot_state, "state JSON file (stars, distribution)");
    cmd_plot->add_option("--theta", plot_theta, "colatitude for a coherent state / tilt")
        ->each([&](const std::string&) { plot_have_theta = true; });
    cmd_plot->add_option("--phi", plot_phi, "azimuth for a coherent state");
    cmd_plot->add_option("--dt", plot_dt, "integrator step (precession, flow)");
    cmd_plot->add_option("--steps", plot_steps, "integrator steps (precession, flow)")
        ->check(CLI::Range(1L, 100000000L));
    cmd_plot->add_option("--stride", plot_stride, "sampling stride, 0 = auto");
    cmd_plot->add_flag("--csv", plot_csv, "emit CSV data instead of SVG");
    cmd_plot->add_option("--out", plot_out, "write to file instead of stdout");

    // stars
    auto* cmd_stars = app.add_subcommand("stars", "star constellation of a state, as JSON");
    std::string stars_state, stars_out;
    cmd_stars->add_option("state", stars_state, "state JSON file")->required();
    cmd_stars->add_option("--out", stars_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_eval->parsed())
            return run_eval(eval_curve, eval_t, eval_json, eval_out);

        if (cmd_report->parsed())
            return run_report(rep_degree, rep_seed, rep_tol, rep_text, rep_out);

        if (cmd_stars->parsed()) {
            emit(stars_to_json(majorana_stars(read_state_json(stars_state))), stars_out);
            return 0;
        }

        if (cmd_plot->parsed()) {
            std::string content;
            if (plot_kind == "basis") {
                content = plot_csv ? plot_basis_csv(plot_degree, plot_samples)
                                   : plot_basis_svg(plot_degree, plot_samples);
            } else if (plot_kind == "curve") {
                if (plot_curve.empty()) throw std::invalid_argument("curve plot needs --curve");
                const BezierCurve c = read_curve_json(plot_curve);
                content = plot_csv ? plot_curve_csv(c, plot_samples)
                                   : plot_curve_svg(c, plot_samples);
            } else if (plot_kind == "stars") {
                const SpinState s = state_from_options(plot_state, plot_degree, plot_theta,
                                                       plot_phi, plot_have_theta);
                const StarConfiguration cfg = majorana_stars(s);
                content = plot_csv ? plot_stars_csv(cfg) : plot_stars_svg(cfg);
            } else if (plot_kind == "distribution") {
                const SpinState s = state_from_options(plot_state, plot_degree, plot_theta,
                                                       plot_phi, plot_have_theta);
                content = plot_csv ? plot_distribution_csv(s) : plot_distribution_svg(s);
            } else if (plot_kind == "precession") {
                const double theta = plot_have_theta ? plot_theta : 1.0;
                const Eigen::Vector3d l0 =
                    0.5 * plot_degree *
                    Eigen::Vector3d(std::sin(theta), 0.0, std::cos(theta));
                const Eigen::Vector3d torque = Eigen::Vector3d::UnitZ();
                const long stride =
                    plot_stride > 0 ? plot_stride : std::max(1L, plot_steps / 2000);
                const auto track = precess(l0, torque, plot_dt, plot_steps, true, stride);
                content = plot_csv ? plot_precession_csv(track, torque)
                                   : plot_precession_svg(track);
            } else if (plot_kind == "flow") {
                Hamiltonian2D h;
                h.value = [](double q, double p) { return 0.5 * (q * q + p * p); };
                h.gradient = [](double q, double p) { return Eigen::Vector2d(q, p); };
                const long stride =
                    plot_stride > 0 ? plot_stride : std::max(1L, plot_steps / 2000);
                const auto track = hamiltonian_flow_2d(h, 1.0, 0.0, plot_dt, plot_steps, stride);
                content = plot_csv ? plot_flow_csv(track) : plot_flow_svg(track);
            } else {
                throw std::invalid_argument("unknown plot kind: " + plot_kind);
            }
            emit(content, plot_out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
