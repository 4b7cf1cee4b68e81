#include "blossomspin/report.hpp"

#include "blossomspin/bernstein.hpp"
#include "blossomspin/classical.hpp"
#include "blossomspin/io.hpp"
#include "blossomspin/oscillator.hpp"
#include "blossomspin/poisson.hpp"
#include "blossomspin/projective.hpp"
#include "blossomspin/rng.hpp"
#include "blossomspin/spin.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blossomspin {

namespace {

constexpr double pi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double check_area_scaling(int d, std::uint64_t) {
    const int dd = std::min(d, 8);
    const double base = fubini_study_pullback_area(1);
    const double scaled = fubini_study_pullback_area(dd);
    return std::abs(scaled / base - dd) / dd;
}

double check_coherent_binomial_law(int d, std::uint64_t seed) {
    CounterRng rng(seed, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = rng.uniform(0.0, pi);
        const double phi = rng.uniform(0.0, 2.0 * pi);
        const Eigen::VectorXd dist = measure_distribution(coherent_state(d, {theta, phi}));
        const double c = std::cos(0.5 * theta);
        const Eigen::VectorXd law = bernstein_row(d, c * c);
        worst = std::max(worst, (dist - law).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_ladder_commutators(int d, std::uint64_t) {
    const SpinOperators op = spin_operators(std::min(d, 12));
    const Eigen::MatrixXcd c1 =
        op.jplus * op.jminus - op.jminus * op.jplus - 2.0 * op.jz;
    const Eigen::MatrixXcd c2 = op.jz * op.jplus - op.jplus * op.jz - op.jplus;
    const Eigen::MatrixXcd c3 = op.jz * op.jminus - op.jminus * op.jz + op.jminus;
    return std::max({max_abs(c1), max_abs(c2), max_abs(c3)});
}

// Monotone decay of the uniform Bernstein/Poisson gap over doubling degrees,
// with the decade ratio pinned near 1/2 once the first-order term dominates.
// max_error is the worst constraint violation; a clean run scores exactly 0.
double check_limit_law(int, std::uint64_t) {
    double defect = 0.0;
    for (const double lambda : {0.5, 1.0, 2.0}) {
        std::vector<double> gaps;
        for (int deg = 8; deg <= 512; deg *= 2)
            gaps.push_back(bernstein_poisson_gap(deg, lambda).first);
        for (std::size_t i = 1; i < gaps.size(); ++i)
            defect = std::max(defect, gaps[i] - gaps[i - 1]);
        for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
            const int deg = 8 << i;
            if (deg < 128) continue;
            const double ratio = gaps[i + 1] / gaps[i];
            defect = std::max({defect, 0.4 - ratio, ratio - 0.6});
        }
    }
    return defect;
}

double check_majorana_roundtrip(int d, std::uint64_t seed) {
    const int dd = std::min(d, 10);
    CounterRng rng(seed, 2);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::VectorXcd a(dd + 1);
        double norm2 = 0.0;
        do {
            for (int k = 0; k <= dd; ++k)
                a(k) = std::complex<double>(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            norm2 = a.squaredNorm();
        } while (norm2 < 1e-6);
        const SpinState s{Eigen::VectorXcd(a)};
        const SpinState back = state_from_stars(majorana_stars(s));
        worst = std::max(worst, 1.0 - fidelity(s, back));
    }
    return worst;
}

double check_moment_map(int d, std::uint64_t) {
    return moment_map_report(std::min(d, 12), 1000).max_abs_difference;
}

double check_oscillator_poisson(int, std::uint64_t) {
    double worst = 0.0;
    for (const double z : {0.5, 1.0, 2.0, 4.0}) {
        const int cutoff = coherent_cutoff(z);
        const FockState f = oscillator_coherent(z, cutoff);
        const Eigen::VectorXd p = f.amplitudes.cwiseAbs2() / f.amplitudes.squaredNorm();
        Eigen::VectorXd q(cutoff + 1);
        for (int n = 0; n <= cutoff; ++n) q(n) = poisson_basis(n, z * z);
        q /= q.sum();
        worst = std::max(worst, 0.5 * (p - q).cwiseAbs().sum());
    }
    return worst;
}

double check_precession_conservation(int d, std::uint64_t) {
    const double theta0 = 1.0;
    const Eigen::Vector3d l0 =
        0.5 * d * Eigen::Vector3d(std::sin(theta0), 0.0, std::cos(theta0));
    const Eigen::Vector3d torque(0.3, -0.2, 0.9);
    const ConservationDrift exact = precession_drift(l0, torque, 1e-3, 1000000, true);
    const ConservationDrift rk4 = precession_drift(l0, torque, 1e-3, 10000, false);
    return std::max({exact.max_norm_drift, exact.max_energy_drift,
                     rk4.max_norm_drift, rk4.max_energy_drift});
}

double check_schwinger_equivalence(int d, std::uint64_t) {
    const int dd = std::min(d, 12);
    const SpinOperators sw = schwinger_spin(dd);
    const SpinOperators sp = spin_operators(dd);
    double worst = std::max({max_abs(sw.jplus - sp.jplus), max_abs(sw.jminus - sp.jminus),
                             max_abs(sw.jz - sp.jz), max_abs(sw.jx - sp.jx),
                             max_abs(sw.jy - sp.jy)});
    const Eigen::MatrixXcd comm =
        sw.jplus * sw.jminus - sw.jminus * sw.jplus - 2.0 * sw.jz;
    return std::max(worst, max_abs(comm));
}

struct CheckDef {
    const char* name;
    const char* anchor;
    double tolerance;
    double (*run)(int, std::uint64_t);
};

// sorted by name; report order is this order
const CheckDef check_table[] = {
    {"area_scaling", "sphere image area scales linearly with degree", 1e-4,
     check_area_scaling},
    {"coherent_binomial_law", "coherent-state amplitudes square to a binomial law", 1e-12,
     check_coherent_binomial_law},
    {"ladder_commutators", "angular momentum ladder algebra", 1e-12,
     check_ladder_commutators},
    {"limit_law", "Bernstein weights approach the Poisson law", 0.0,
     check_limit_law},
    {"majorana_roundtrip", "a state is recoverable from its star constellation", 1e-9,
     check_majorana_roundtrip},
    {"moment_map_agreement", "height expectation equals classical latitude", 1e-10,
     check_moment_map},
    {"oscillator_poisson_law", "oscillator coherent amplitudes square to a Poisson law",
     1e-10, check_oscillator_poisson},
    {"precession_conservation", "uniform precession preserves length and energy", 1e-9,
     check_precession_conservation},
    {"schwinger_equivalence", "two-oscillator sector realization of the spin algebra",
     1e-12, check_schwinger_equivalence},
};

} // namespace

bool Report::all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.passed; });
}

std::map<std::string, double> default_tolerances() {
    std::map<std::string, double> t;
    for (const CheckDef& c : check_table) t[c.name] = c.tolerance;
    return t;
}

std::map<std::string, double> load_tolerances(const std::string& path) {
    const nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::invalid_argument("tolerance file must be a JSON object: " + path);
    std::map<std::string, double> t = default_tolerances();
    for (const auto& [key, value] : j.items()) {
        const auto it = t.find(key);
        if (it == t.end())
            throw std::invalid_argument("tolerance file names an unknown check: " + key);
        if (!value.is_number())
            throw std::invalid_argument("tolerance for " + key + " must be a number");
        const double tol = value.get<double>();
        if (!(tol >= 0.0) || !std::isfinite(tol))
            throw std::invalid_argument("tolerance for " + key + " must be finite and >= 0");
        it->second = tol;
    }
    return t;
}

Report run_report(int degree, std::uint64_t seed,
                  const std::map<std::string, double>& tolerances) {
    if (degree < 1) throw std::invalid_argument("run_report: degree must be positive");
    Report rep;
    rep.degree = degree;
    rep.seed = seed;
    for (const CheckDef& c : check_table) {
        ReportEntry e;
        e.check_name = c.name;
        e.paper_anchor = c.anchor;
        const auto it = tolerances.find(c.name);
        e.tolerance = (it != tolerances.end()) ? it->second : c.tolerance;
        e.max_error = c.run(degree, seed);
        e.passed = e.max_error <= e.tolerance;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string report_to_json(const Report& report) {
    std::string out = "{\n  \"degree\": " + std::to_string(report.degree) +
                      ",\n  \"seed\": " + std::to_string(report.seed) +
                      ",\n  \"entries\": [\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const ReportEntry& e = report.entries[i];
        out += "    {\"check_name\": \"" + e.check_name +
               "\", \"paper_anchor\": \"" + e.paper_anchor +
               "\", \"max_error\": " + format_full(e.max_error) +
               ", \"tolerance\": " + format_full(e.tolerance) +
               ", \"passed\": " + (e.passed ? "true" : "false") + "}";
        out += (i + 1 < report.entries.size()) ? ",\n" : "\n";
    }
    out += "  ],\n  \"all_passed\": ";
    out += report.all_passed() ? "true" : "false";
    return out + "\n}\n";
}

std::string report_to_text(const Report& report) {
    std::string out = "verification report, degree " + std::to_string(report.degree) +
                      ", seed " + std::to_string(report.seed) + "\n";
    for (const ReportEntry& e : report.entries) {
        out += (e.passed ? "  pass  " : "  FAIL  ") + e.check_name + ": max error " +
               format_human(e.max_error) + " vs tolerance " + format_human(e.tolerance) +
               " (" + e.paper_anchor + ")\n";
    }
    out += report.all_passed() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

} // namespace blossomspin
