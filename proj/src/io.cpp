#include "blossomspin/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blossomspin {

using nlohmann::json;

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_human(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

json parse_file(const std::string& path) {
    json j = json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("not valid JSON: " + path);
    return j;
}

} // namespace

BezierCurve read_curve_json(const std::string& path) {
    const json j = parse_file(path);
    if (!j.is_object() || !j.contains("degree") || !j.contains("points"))
        throw std::invalid_argument(path + ": expected {\"degree\", \"points\"}");
    if (!j["degree"].is_number_integer())
        throw std::invalid_argument(path + ": degree must be an integer");
    const int d = j["degree"].get<int>();
    const json& pts = j["points"];
    if (d < 0 || !pts.is_array() || static_cast<int>(pts.size()) != d + 1)
        throw std::invalid_argument(path + ": need exactly degree+1 point rows");
    int dim = -1;
    for (const json& row : pts) {
        if (!row.is_array() || row.empty())
            throw std::invalid_argument(path + ": each point must be a nonempty array");
        if (dim < 0) dim = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument(path + ": point rows differ in length");
        for (const json& v : row)
            if (!v.is_number())
                throw std::invalid_argument(path + ": point entries must be numbers");
    }
    Eigen::MatrixXd m(d + 1, dim);
    for (int i = 0; i <= d; ++i)
        for (int c = 0; c < dim; ++c) m(i, c) = pts[i][c].get<double>();
    return BezierCurve(std::move(m));
}

std::string curve_to_json(const BezierCurve& curve) {
    std::string out = "{\"degree\": " + std::to_string(curve.degree()) + ", \"points\": [";
    for (int i = 0; i <= curve.degree(); ++i) {
        out += (i ? ", [" : "[");
        for (int c = 0; c < curve.dimension(); ++c) {
            if (c) out += ", ";
            out += format_full(curve.points(i, c));
        }
        out += "]";
    }
    return out + "]}\n";
}

SpinState read_state_json(const std::string& path) {
    const json j = parse_file(path);
    if (!j.is_object() || !j.contains("d") || !j.contains("amplitudes"))
        throw std::invalid_argument(path + ": expected {\"d\", \"amplitudes\"}");
    if (!j["d"].is_number_integer())
        throw std::invalid_argument(path + ": d must be an integer");
    const int d = j["d"].get<int>();
    const json& amps = j["amplitudes"];
    if (d < 0 || !amps.is_array() || static_cast<int>(amps.size()) != d + 1)
        throw std::invalid_argument(path + ": need exactly d+1 amplitude pairs");
    Eigen::VectorXcd a(d + 1);
    for (int k = 0; k <= d; ++k) {
        const json& pair = amps[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw std::invalid_argument(path + ": amplitudes must be [re, im] pairs");
        a(k) = std::complex<double>(pair[0].get<double>(), pair[1].get<double>());
    }
    return SpinState(std::move(a));
}

std::string state_to_json(const SpinState& state) {
    std::string out = "{\"d\": " + std::to_string(state.d()) + ", \"amplitudes\": [";
    for (int k = 0; k <= state.d(); ++k) {
        out += (k ? ", [" : "[");
        out += format_full(state.amplitudes(k).real());
        out += ", ";
        out += format_full(state.amplitudes(k).imag());
        out += "]";
    }
    return out + "]}\n";
}

std::string stars_to_json(const StarConfiguration& cfg) {
    std::string out = "[";
    bool first = true;
    for (const RiemannPoint& p : cfg.stars) {
        out += first ? "" : ", ";
        first = false;
        if (p.at_infinity()) {
            out += "{\"infinity\": true}";
        } else {
            const SphereAngles a = stereographic_to_angles(p);
            out += "{\"theta\": " + format_full(a.theta) +
                   ", \"phi\": " + format_full(a.phi) + "}";
        }
    }
    return out + "]\n";
}

} // namespace blossomspin
