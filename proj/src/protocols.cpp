#include "sp2q/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "sp2q/measure.hpp"

namespace sp2q {

std::string to_string(Detector d) {
    switch (d) {
        case Detector::Rv: return "Rv";
        case Detector::Rh: return "Rh";
        case Detector::Lv: return "Lv";
        case Detector::Lh: return "Lh";
    }
    throw std::invalid_argument("unknown detector");
}

Detector grover_run(int oracle_k) {
    if (oracle_k < 1 || oracle_k > 4) throw std::out_of_range("oracle index must be 1..4");
    const std::array<GateName, 4> oracles{GateName::GroverG1, GateName::GroverG2, GateName::GroverG3,
                                          GateName::GroverG4};

    StateVec photon{};
    photon[0] = 1.0;  // |Rv>
    photon = apply(gate(GateName::WalshHadamard), photon);
    photon = apply(gate(oracles[static_cast<std::size_t>(oracle_k - 1)]), photon);
    photon = apply(gate(GateName::GroverSg), photon);

    for (int k = 0; k < 4; ++k)
        if (std::norm(photon[k]) > 0.5) return static_cast<Detector>(k);
    throw std::logic_error("grover_run: final state is not a basis state");
}

StateVec vaa_prepare(const VaaMeasurement& m) {
    if ((m.which < 1 || m.which > 3) || (m.outcome != 1 && m.outcome != -1))
        throw std::invalid_argument("vaa_prepare: invalid measurement");
    const double s = m.outcome;
    switch (m.which) {
        case 1:  // (|Rv> +- |Rh> +- |Lv> + |Lh>) / 2
            return StateVec{{cd(0.5), cd(0.5 * s), cd(0.5 * s), cd(0.5)}};
        case 2:  // (|Rv> +- i|Rh> -+ i|Lv> + |Lh>) / 2
            return StateVec{{cd(0.5), cd(0, 0.5 * s), cd(0, -0.5 * s), cd(0.5)}};
        default:  // |Rv> or |Lh>
            return m.outcome > 0 ? StateVec{{cd(1), cd(0), cd(0), cd(0)}}
                                 : StateVec{{cd(0), cd(0), cd(0), cd(1)}};
    }
}

std::array<double, 4> vaa_probabilities(const StateVec& state) {
    if (std::abs(state.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("vaa_probabilities: state is not normalized");
    const auto f = basis(BasisName::Vaa);
    std::array<double, 4> p{};
    for (int j = 0; j < 4; ++j) p[static_cast<std::size_t>(j)] = std::norm(inner(f[static_cast<std::size_t>(j)], state));
    return p;
}

namespace {

// Inference table, derived from the computed probabilities rather than
// hard-coded: entry (detector j, which w) is the unique outcome whose
// prepared state can reach detector j.
const std::array<std::array<int, 3>, 4>& inference_table() {
    static const std::array<std::array<int, 3>, 4> table = [] {
        std::array<std::array<int, 3>, 4> t{};
        for (int which = 1; which <= 3; ++which) {
            for (int j = 0; j < 4; ++j) {
                int found = 0;
                for (int outcome : {+1, -1}) {
                    const auto p = vaa_probabilities(vaa_prepare({which, outcome}));
                    if (p[static_cast<std::size_t>(j)] > 1e-9) {
                        if (found != 0) throw std::logic_error("VAA inference is ambiguous");
                        found = outcome;
                    }
                }
                if (found == 0) throw std::logic_error("VAA inference has a dead detector");
                t[static_cast<std::size_t>(j)][static_cast<std::size_t>(which - 1)] = found;
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

int vaa_infer(int detector, int which) {
    if (detector < 1 || detector > 4) throw std::out_of_range("detector index must be 1..4");
    if (which < 1 || which > 3) throw std::out_of_range("measurement index must be 1..3");
    return inference_table()[static_cast<std::size_t>(detector - 1)][static_cast<std::size_t>(which - 1)];
}

VaaTranscript vaa_run_prepared(const VaaMeasurement& m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    rng.next_u64();
    rng.next_u64();  // keep the stream layout of vaa_full_run

    VaaTranscript t{};
    t.measurement = m;
    t.seed = seed;
    t.prepared_state = vaa_prepare(m);

    const auto p = vaa_probabilities(t.prepared_state);
    const double u = rng.uniform();
    double acc = 0.0;
    int detector = 4;
    for (int j = 0; j < 4; ++j) {
        acc += p[static_cast<std::size_t>(j)];
        if (u < acc) {
            detector = j + 1;
            break;
        }
    }
    t.detector = detector;
    t.inferred_outcome = vaa_infer(t.detector, m.which);
    t.consistent = t.inferred_outcome == m.outcome;
    return t;
}

VaaTranscript vaa_full_run(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int which = 1 + static_cast<int>(rng.next_u64() % 3);
    // maximally entangled source: each outcome has probability 1/2
    const int outcome = rng.uniform() < 0.5 ? +1 : -1;

    VaaTranscript t = vaa_run_prepared({which, outcome}, seed);
    return t;
}

}  // namespace sp2q
