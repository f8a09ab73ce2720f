#ifndef SP2Q_GATES_HPP
#define SP2Q_GATES_HPP

#include <array>
#include <string>

#include "sp2q/assembly.hpp"
#include "sp2q/mat.hpp"

namespace sp2q {

enum class GateName {
    CnotTauSigma,   ///< spatial qubit controls the polarization flip
    CnotSigmaTau,   ///< polarization controls the port flip
    Swap,           ///< exchanges the roles of the two qubits
    WalshHadamard,  ///< standard basis to equal-weight superpositions
    Bell,           ///< maps the Bell basis to the standard basis
    GroverG1,       ///< oracle marking |Rv>
    GroverG2,       ///< oracle marking |Rh>
    GroverG3,       ///< oracle marking |Lv>
    GroverG4,       ///< oracle marking |Lh>
    GroverSg,       ///< readout gate of the four-item search
    Vaa,            ///< maps the VAA basis to the standard basis
    Tomo1,          ///< measurement gate, observables (tau1, sigma1)
    Tomo2,          ///< (tau2, sigma2)
    Tomo3,          ///< (tau3, sigma3): the identity
    Tomo4,          ///< (tau1 sigma2, tau2 sigma3)
    Tomo5,          ///< (tau2 sigma1, tau3 sigma2)
};

constexpr std::array<GateName, 16> kAllGates = {
    GateName::CnotTauSigma, GateName::CnotSigmaTau, GateName::Swap,     GateName::WalshHadamard,
    GateName::Bell,         GateName::GroverG1,     GateName::GroverG2, GateName::GroverG3,
    GateName::GroverG4,     GateName::GroverSg,     GateName::Vaa,      GateName::Tomo1,
    GateName::Tomo2,        GateName::Tomo3,        GateName::Tomo4,    GateName::Tomo5,
};

/// Kebab-case name, e.g. "cnot-tau-sigma", "grover-g2", "tomo-4".
std::string to_string(GateName name);
/// Parses a kebab-case name; throws std::invalid_argument on unknown names.
GateName gate_name_from_string(const std::string& s);

/// The gate matrix in the (Rv, Rh, Lv, Lh) basis.
Mat4 gate(GateName name);

/// Returns true if published wave-plate settings exist for this gate.
bool has_settings(GateName name);

/// Station settings whose assembly reproduces gate(name) exactly,
/// global phase included.  Throws std::domain_error when the gate has
/// no published settings (the Grover oracles).
SetupConfig settings(GateName name);

enum class BasisName { Standard, Bell, Vaa };
BasisName basis_name_from_string(const std::string& s);

/// Four mutually orthonormal states of the requested basis.
std::array<StateVec, 4> basis(BasisName name);

/// Commuting pair of +-1 observables whose joint eigenbasis is the
/// measurement basis of tomography run k.
struct ObservablePair {
    Mat4 a, b;
};

/// Table-of-five observable pairs, k in 1..5.
ObservablePair observable_pair(int k);

/// The VAA observables A, B and their product AB = BA.
struct VaaObservables {
    Mat4 a, b, ab;
};
VaaObservables vaa_observables();

}  // namespace sp2q

#endif
