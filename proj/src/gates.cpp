#include "sp2q/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace sp2q {

namespace {

const cd I(0.0, 1.0);

Mat4 permutation_gate(int c0, int c1, int c2, int c3) {
    Mat4 m;
    m(c0, 0) = m(c1, 1) = m(c2, 2) = m(c3, 3) = 1.0;
    return m;
}

Mat4 grover_oracle(int k) {
    Mat4 m = Mat4::identity();
    m(k, k) = -1.0;
    return m;
}

// Station constants for the published settings.  Each realizes the
// polarization operator named in the comment, with its phase explicit.
StationConfig station(double phase, double a, double b, double g) {
    return StationConfig{PhaseAngle(phase), WavePlateAngle(a), WavePlateAngle(b), WavePlateAngle(g)};
}

const double pi = M_PI;

const StationConfig kIdentity = station(0, 0, pi / 2, 0);              // 1
const StationConfig kMinusIdentity = station(pi, 0, pi / 2, 0);        // -1
const StationConfig kPlusI = station(pi / 2, 0, pi / 2, 0);            // i
const StationConfig kMinusI = station(-pi / 2, 0, pi / 2, 0);          // -i
const StationConfig kSigma1 = station(-pi / 2, pi / 4, -pi / 4, -pi / 4);      // sigma1
const StationConfig kMinusSigma1 = station(pi / 2, pi / 4, -pi / 4, -pi / 4);  // -sigma1
const StationConfig kISigma1 = station(pi, pi / 4, pi / 4, -pi / 4);           // i sigma1 = hwp(-pi/4)
const StationConfig kMinusISigma1 = station(pi, pi / 4, -pi / 4, -pi / 4);     // -i sigma1 = hwp(pi/4)
const StationConfig kSigma3 = station(-pi / 2, pi / 4, pi / 2, pi / 4);        // sigma3
const StationConfig kMinusSigma3 = station(pi / 2, pi / 4, pi / 2, pi / 4);    // -sigma3
const StationConfig kMinusISigma2 = station(pi, -pi / 4, 0, pi / 4);           // -i sigma2
const StationConfig kQwpPlus = station(0, pi / 2, pi / 8, pi / 2);             // qwp(pi/4)
const StationConfig kQwpMinus = station(0, 0, -3 * pi / 8, 0);                 // qwp(-pi/4)
// -(1+i)/2 (sigma1+sigma3) and its conjugate partner
const StationConfig kMinusEpsH = station(3 * pi / 4, pi / 4, -3 * pi / 8, pi / 2);
const StationConfig kMinusEpsConjH = station(pi / 4, pi / 4, -3 * pi / 8, pi / 2);
// (1+i)/2 (1 - i sigma1) = e^{i pi/4} qwp(pi/4) and conjugate partner
const StationConfig kEpsQwp = station(pi / 4, pi / 2, pi / 8, pi / 2);
const StationConfig kEpsConjQwp = station(-pi / 4, pi / 2, pi / 8, pi / 2);
// e^{-i pi/4} qwp(0) qwp(-pi/4)
const StationConfig kVaaArmR = station(-pi / 4, pi / 4, -pi / 4, 0);
// qwp(pi/4) qwp(0) qwp(-pi/4) = (1 + i sigma2)/sqrt2
const StationConfig kVaaArmL = station(0, -3 * pi / 8, 0, 3 * pi / 8);

Mat4 vaa_gate() {
    const Mat2 one = Mat2::identity();
    const Mat2 v1 = I * pauli_sigma(1);
    const Mat2 vr = cd(0.5) * ((cd(1) - I) / std::sqrt(2.0)) *
                    (one + I * pauli_sigma(1) + I * pauli_sigma(2) - I * pauli_sigma(3));
    const Mat2 vl = cd(1.0 / std::sqrt(2.0)) * (one + I * pauli_sigma(2));
    return assemble_from_vs(v1, one, vr, vl);
}

}  // namespace

std::string to_string(GateName name) {
    switch (name) {
        case GateName::CnotTauSigma: return "cnot-tau-sigma";
        case GateName::CnotSigmaTau: return "cnot-sigma-tau";
        case GateName::Swap: return "swap";
        case GateName::WalshHadamard: return "walsh-hadamard";
        case GateName::Bell: return "bell";
        case GateName::GroverG1: return "grover-g1";
        case GateName::GroverG2: return "grover-g2";
        case GateName::GroverG3: return "grover-g3";
        case GateName::GroverG4: return "grover-g4";
        case GateName::GroverSg: return "grover-sg";
        case GateName::Vaa: return "vaa";
        case GateName::Tomo1: return "tomo-1";
        case GateName::Tomo2: return "tomo-2";
        case GateName::Tomo3: return "tomo-3";
        case GateName::Tomo4: return "tomo-4";
        case GateName::Tomo5: return "tomo-5";
    }
    throw std::invalid_argument("unknown gate");
}

GateName gate_name_from_string(const std::string& s) {
    for (GateName g : kAllGates)
        if (to_string(g) == s) return g;
    throw std::invalid_argument("unknown gate name: " + s);
}

Mat4 gate(GateName name) {
    const Mat2 one2 = Mat2::identity();
    switch (name) {
        case GateName::CnotTauSigma: return permutation_gate(0, 1, 3, 2);
        case GateName::CnotSigmaTau: return permutation_gate(0, 3, 2, 1);
        case GateName::Swap: return permutation_gate(0, 2, 1, 3);
        case GateName::WalshHadamard:
        case GateName::Tomo1:
            return cd(0.5) * kron(pauli_tau(1) + pauli_tau(3), pauli_sigma(1) + pauli_sigma(3));
        case GateName::Bell:
            return cd(1.0 / std::sqrt(2.0)) * (Mat4::identity() - I * kron(pauli_tau(2), pauli_sigma(1)));
        case GateName::GroverG1: return grover_oracle(0);
        case GateName::GroverG2: return grover_oracle(1);
        case GateName::GroverG3: return grover_oracle(2);
        case GateName::GroverG4: return grover_oracle(3);
        case GateName::GroverSg:
            return cd(0.5) * (Mat4::identity() - kron(pauli_tau(1), one2) - kron(one2, pauli_sigma(1)) -
                              kron(pauli_tau(1), pauli_sigma(1)));
        case GateName::Vaa: return vaa_gate();
        case GateName::Tomo2:
            return cd(0.5) * kron(one2 - I * pauli_tau(1), one2 - I * pauli_sigma(1));
        case GateName::Tomo3: return Mat4::identity();
        case GateName::Tomo4:
            return cd(0.5) * (Mat4::identity() + kron(pauli_tau(2), one2) - I * kron(one2, pauli_sigma(2)) +
                              I * kron(pauli_tau(2), pauli_sigma(2)));
        case GateName::Tomo5:
            return cd(0.5) * (Mat4::identity() - I * kron(pauli_tau(2), one2) -
                              I * kron(pauli_tau(1), pauli_sigma(1)) - I * kron(pauli_tau(3), pauli_sigma(1)));
    }
    throw std::invalid_argument("unknown gate");
}

bool has_settings(GateName name) {
    switch (name) {
        case GateName::GroverG1:
        case GateName::GroverG2:
        case GateName::GroverG3:
        case GateName::GroverG4: return false;
        default: return true;
    }
}

SetupConfig settings(GateName name) {
    switch (name) {
        case GateName::CnotTauSigma: return {kSigma1, kIdentity, kSigma1, kSigma1};
        case GateName::CnotSigmaTau: return {kMinusI, kPlusI, kIdentity, kSigma3};
        case GateName::Swap: return {kMinusISigma1, kISigma1, kIdentity, kMinusSigma3};
        case GateName::WalshHadamard:
        case GateName::Tomo1: return {kIdentity, kMinusIdentity, kMinusEpsH, kMinusEpsConjH};
        case GateName::Bell: return {kIdentity, kIdentity, kQwpPlus, kQwpMinus};
        // The printed choice i V1 = -i V2 = -V_L = 1, V_R = sigma1
        // assembles to the negative of the readout gate; flipping the
        // sign of both arms restores the exact matrix.
        case GateName::GroverSg: return {kMinusI, kPlusI, kMinusSigma1, kIdentity};
        case GateName::Vaa: return {kISigma1, kIdentity, kVaaArmR, kVaaArmL};
        case GateName::Tomo2: return {kPlusI, kMinusI, kEpsQwp, kEpsConjQwp};
        case GateName::Tomo3: return {kIdentity, kIdentity, kIdentity, kIdentity};
        case GateName::Tomo4: return {kIdentity, kIdentity, kIdentity, kMinusISigma2};
        case GateName::Tomo5: return {kMinusI, kSigma1, kIdentity, kISigma1};
        default: throw std::domain_error("no published settings for " + to_string(name));
    }
}

BasisName basis_name_from_string(const std::string& s) {
    if (s == "standard") return BasisName::Standard;
    if (s == "bell") return BasisName::Bell;
    if (s == "vaa") return BasisName::Vaa;
    throw std::invalid_argument("unknown basis name: " + s);
}

std::array<StateVec, 4> basis(BasisName name) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (name) {
        case BasisName::Standard: {
            std::array<StateVec, 4> out{};
            for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(k)][k] = 1.0;
            return out;
        }
        case BasisName::Bell: {
            std::array<StateVec, 4> out{};
            out[0] = StateVec{{cd(r), cd(0), cd(0), cd(-r)}};
            out[1] = StateVec{{cd(0), cd(r), cd(-r), cd(0)}};
            out[2] = StateVec{{cd(0), cd(r), cd(r), cd(0)}};
            out[3] = StateVec{{cd(r), cd(0), cd(0), cd(r)}};
            return out;
        }
        case BasisName::Vaa: {
            // Bras in Bell components; the kets take the conjugates.
            const cd coeff[4][4] = {{1, -I, 1, 1}, {1, I, -1, 1}, {-1, I, 1, 1}, {-1, -I, -1, 1}};
            const auto bell = basis(BasisName::Bell);
            std::array<StateVec, 4> out{};
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int a = 0; a < 4; ++a)
                        out[static_cast<std::size_t>(j)][a] +=
                            cd(0.5) * std::conj(coeff[j][k]) * bell[static_cast<std::size_t>(k)][a];
            return out;
        }
    }
    throw std::invalid_argument("unknown basis");
}

ObservablePair observable_pair(int k) {
    const Mat2 one = Mat2::identity();
    switch (k) {
        case 1: return {kron(pauli_tau(1), one), kron(one, pauli_sigma(1))};
        case 2: return {kron(pauli_tau(2), one), kron(one, pauli_sigma(2))};
        case 3: return {kron(pauli_tau(3), one), kron(one, pauli_sigma(3))};
        case 4: return {kron(pauli_tau(1), pauli_sigma(2)), kron(pauli_tau(2), pauli_sigma(3))};
        case 5: return {kron(pauli_tau(2), pauli_sigma(1)), kron(pauli_tau(3), pauli_sigma(2))};
        default: throw std::out_of_range("observable pair index must be 1..5");
    }
}

VaaObservables vaa_observables() {
    const Mat2 one = Mat2::identity();
    VaaObservables v;
    v.a = cd(0.5) * (kron(pauli_tau(3), one) + kron(one, pauli_sigma(3)) +
                     kron(pauli_tau(1), pauli_sigma(2)) - kron(pauli_tau(2), pauli_sigma(1)));
    v.b = cd(0.5) * (kron(pauli_tau(1), one) + kron(one, pauli_sigma(1)) -
                     kron(pauli_tau(2), pauli_sigma(3)) + kron(pauli_tau(3), pauli_sigma(2)));
    v.ab = cd(0.5) * (-kron(pauli_tau(2), one) + kron(one, pauli_sigma(2)) +
                      kron(pauli_tau(1), pauli_sigma(3)) + kron(pauli_tau(3), pauli_sigma(1)));
    return v;
}

}  // namespace sp2q
