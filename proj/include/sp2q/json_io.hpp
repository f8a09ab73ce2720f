#ifndef SP2Q_JSON_IO_HPP
#define SP2Q_JSON_IO_HPP

#include <optional>
#include <string>

#include "sp2q/assembly.hpp"
#include "sp2q/mat.hpp"
#include "sp2q/measure.hpp"
#include "sp2q/protocols.hpp"

namespace sp2q {

// Serialization is hand-rolled for byte-stable output: fixed key order
// and numbers printed with 17 significant digits, which round-trips
// doubles exactly.  Parsing goes through nlohmann::json and throws
// std::invalid_argument on schema violations.

std::string to_json(const Mat2& m);
std::string to_json(const Mat4& m);
std::string to_json(const StateVec& v);
std::string to_json(const MZConfig& cfg);
std::string to_json(const SetupConfig& cfg);
std::string to_json(const DensityMat& rho);
std::string to_json(const TomographyResult& result);
std::string to_json(const VaaTranscript& transcript);

/// Simulation report: analytic probabilities, plus counts when sampled.
struct SimulationReport {
    std::array<double, 4> probabilities{};
    std::optional<CountTable> counts;
    std::uint64_t seed = 0;
};
std::string to_json(const SimulationReport& report);

Mat2 mat2_from_json(const std::string& text);
Mat4 mat4_from_json(const std::string& text);
StateVec statevec_from_json(const std::string& text);
MZConfig mz_from_json(const std::string& text);
SetupConfig setup_from_json(const std::string& text);
/// Parses the matrix only; positivity is the caller's concern.
Mat4 density_matrix_from_json(const std::string& text);

}  // namespace sp2q

#endif
