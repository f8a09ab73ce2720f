#ifndef SP2Q_PROTOCOLS_HPP
#define SP2Q_PROTOCOLS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "sp2q/gates.hpp"
#include "sp2q/mat.hpp"

namespace sp2q {

enum class Detector { Rv, Rh, Lv, Lh };
std::string to_string(Detector d);

/// Four-item search: |Rv> through the Walsh-Hadamard gate, the selected
/// oracle, then the readout gate.  The final state is a standard basis
/// state, so the click identifies the oracle with certainty.
Detector grover_run(int oracle_k);

/// One of the three complementary polarization measurements and its
/// outcome; what the first party measures and imprints on photon 1.
struct VaaMeasurement {
    int which;    ///< 1, 2, 3 for sigma1, sigma2, sigma3
    int outcome;  ///< +1 or -1
};

/// Photon-1 state after the measured polarization has been re-imprinted.
StateVec vaa_prepare(const VaaMeasurement& m);

/// Probabilities of the four VAA-basis detectors for a given state.
std::array<double, 4> vaa_probabilities(const StateVec& state);

/// The unique outcome of measurement `which` compatible with the
/// detector that fired.  Total: every (detector, which) pair has
/// exactly one consistent outcome.
int vaa_infer(int detector, int which);

struct VaaTranscript {
    VaaMeasurement measurement;
    StateVec prepared_state;
    int detector;  ///< 1..4, the VAA-basis outcome f_detector
    int inferred_outcome;
    bool consistent;
    std::uint64_t seed;
};

/// Full three-stage run: draw the measurement uniformly and its outcome
/// with the Born rule (each 1/2 here), prepare, detect, infer.
VaaTranscript vaa_full_run(std::uint64_t seed);

/// Run with the first party's measurement fixed; only the detector is
/// sampled.
VaaTranscript vaa_run_prepared(const VaaMeasurement& m, std::uint64_t seed);

}  // namespace sp2q

#endif
