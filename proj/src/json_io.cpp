#include "sp2q/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace sp2q {

namespace {

using nlohmann::json;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string complex_pair(cd z) { return "[" + num(z.real()) + "," + num(z.imag()) + "]"; }

template <int N>
std::string rows(const Mat<N>& m) {
    std::string out = "[";
    for (int r = 0; r < N; ++r) {
        out += r ? ",[" : "[";
        for (int c = 0; c < N; ++c) {
            if (c) out += ",";
            out += complex_pair(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

template <int N>
std::string matrix_json(const Mat<N>& m) {
    return "{\"dim\":" + std::to_string(N) + ",\"rows\":" + rows(m) + "}";
}

std::string station_json(const StationConfig& s) {
    return "{\"phase\":" + num(s.phase.radians()) + ",\"alpha\":" + num(s.alpha.radians()) +
           ",\"beta\":" + num(s.beta.radians()) + ",\"gamma\":" + num(s.gamma.radians()) + "}";
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

double get_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument(std::string("missing numeric field \"") + key + "\"");
    return j.at(key).get<double>();
}

cd entry_to_complex(const json& e) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    return cd(e[0].get<double>(), e[1].get<double>());
}

template <int N>
Mat<N> matrix_from(const json& j) {
    if (get_number(j, "dim") != N) throw std::invalid_argument("unexpected matrix dimension");
    if (!j.contains("rows")) throw std::invalid_argument("missing \"rows\"");
    const json& r = j.at("rows");
    if (!r.is_array() || r.size() != N) throw std::invalid_argument("rows must hold one array per row");
    Mat<N> m;
    for (int row = 0; row < N; ++row) {
        const json& jr = r[static_cast<std::size_t>(row)];
        if (!jr.is_array() || jr.size() != N) throw std::invalid_argument("bad row length");
        for (int col = 0; col < N; ++col)
            m(row, col) = entry_to_complex(jr[static_cast<std::size_t>(col)]);
    }
    m.require_finite();
    return m;
}

StationConfig station_from(const json& j) {
    return StationConfig{PhaseAngle(get_number(j, "phase")), WavePlateAngle(get_number(j, "alpha")),
                         WavePlateAngle(get_number(j, "beta")), WavePlateAngle(get_number(j, "gamma"))};
}

}  // namespace

std::string to_json(const Mat2& m) { return matrix_json(m); }
std::string to_json(const Mat4& m) { return matrix_json(m); }

std::string to_json(const StateVec& v) {
    std::string out = "{\"amps\":[";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ",";
        out += complex_pair(v[k]);
    }
    return out + "]}";
}

std::string to_json(const MZConfig& cfg) {
    return "{\"phi1\":" + num(cfg.phi1.radians()) + ",\"phi2\":" + num(cfg.phi2.radians()) +
           ",\"vphi1\":" + num(cfg.vphi1.radians()) + ",\"vphi2\":" + num(cfg.vphi2.radians()) + "}";
}

std::string to_json(const SetupConfig& cfg) {
    return "{\"entry\":" + station_json(cfg.entry) + ",\"exit\":" + station_json(cfg.exit) +
           ",\"arm_r\":" + station_json(cfg.arm_r) + ",\"arm_l\":" + station_json(cfg.arm_l) + "}";
}

std::string to_json(const DensityMat& rho) { return matrix_json(rho.matrix()); }

std::string to_json(const TomographyResult& result) {
    std::string out = "{\"coefficients\":{";
    bool first = true;
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
            if (j == 0 && k == 0) continue;
            if (!first) out += ",";
            first = false;
            out += "\"c" + std::to_string(j) + std::to_string(k) + "\":" + num(result.coefficients(j, k));
        }
    out += "},\"rho\":" + matrix_json(result.rho.matrix());
    out += ",\"positive\":" + std::string(result.positive ? "true" : "false");
    out += ",\"shots\":" + std::to_string(result.shots_per_basis);
    out += ",\"seed\":" + std::to_string(result.seed) + "}";
    return out;
}

std::string to_json(const VaaTranscript& t) {
    std::string out = "{\"measurement\":\"sigma" + std::to_string(t.measurement.which) + "\"";
    out += ",\"outcome\":" + std::to_string(t.measurement.outcome);
    out += ",\"detector\":\"f" + std::to_string(t.detector) + "\"";
    out += ",\"inferred\":" + std::to_string(t.inferred_outcome);
    out += ",\"consistent\":" + std::string(t.consistent ? "true" : "false");
    out += ",\"seed\":" + std::to_string(t.seed) + "}";
    return out;
}

std::string to_json(const SimulationReport& report) {
    std::string out = "{\"probabilities\":[";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ",";
        out += num(report.probabilities[static_cast<std::size_t>(k)]);
    }
    out += "]";
    if (report.counts) {
        const char* keys[4] = {"Rv", "Rh", "Lv", "Lh"};
        out += ",\"counts\":{";
        for (int k = 0; k < 4; ++k) {
            if (k) out += ",";
            out += "\"" + std::string(keys[k]) + "\":" +
                   std::to_string(report.counts->counts[static_cast<std::size_t>(k)]);
        }
        out += "},\"shots\":" + std::to_string(report.counts->shots);
        out += ",\"seed\":" + std::to_string(report.seed);
    }
    return out + "}";
}

Mat2 mat2_from_json(const std::string& text) { return matrix_from<2>(parse(text)); }
Mat4 mat4_from_json(const std::string& text) { return matrix_from<4>(parse(text)); }

StateVec statevec_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("amps") || !j.at("amps").is_array() || j.at("amps").size() != 4)
        throw std::invalid_argument("state must carry four amplitudes");
    std::array<cd, 4> amps{};
    for (int k = 0; k < 4; ++k) amps[static_cast<std::size_t>(k)] = entry_to_complex(j.at("amps")[static_cast<std::size_t>(k)]);
    return StateVec::normalized(amps);
}

MZConfig mz_from_json(const std::string& text) {
    const json j = parse(text);
    return MZConfig{PhaseAngle(get_number(j, "phi1")), PhaseAngle(get_number(j, "phi2")),
                    PhaseAngle(get_number(j, "vphi1")), PhaseAngle(get_number(j, "vphi2"))};
}

SetupConfig setup_from_json(const std::string& text) {
    const json j = parse(text);
    for (const char* key : {"entry", "exit", "arm_r", "arm_l"})
        if (!j.contains(key) || !j.at(key).is_object())
            throw std::invalid_argument(std::string("missing station \"") + key + "\"");
    return SetupConfig{station_from(j.at("entry")), station_from(j.at("exit")),
                       station_from(j.at("arm_r")), station_from(j.at("arm_l"))};
}

Mat4 density_matrix_from_json(const std::string& text) { return matrix_from<4>(parse(text)); }

}  // namespace sp2q
