#ifndef SP2Q_ASSEMBLY_HPP
#define SP2Q_ASSEMBLY_HPP

#include "sp2q/elements.hpp"
#include "sp2q/mat.hpp"

namespace sp2q {

/// Mach-Zehnder phase settings: phi1/phi2 sit in the entry/exit R ports,
/// vphi1/vphi2 inside the R and L arms.
struct MZConfig {
    PhaseAngle phi1{0}, phi2{0}, vphi1{0}, vphi2{0};
};

/// One phase shifter plus a QWP-HWP-QWP triple.  Realizes
/// e^{i phase} * pol_triple(alpha, beta, gamma) on the polarization.
struct StationConfig {
    PhaseAngle phase{0};
    WavePlateAngle alpha{0}, beta{0}, gamma{0};
};

/// Full two-qubit gate description: stations in the entry R port, the
/// exit R port and the two interferometer arms.  The L entry and exit
/// ports carry no elements by construction.
struct SetupConfig {
    StationConfig entry, exit, arm_r, arm_l;
};

/// Spatial-only interferometer:
/// U_R(phi2) U_BS U_R(vphi1) U_L(vphi2) U_mirr U_BS U_R(phi1).
Mat2 assemble_mz(const MZConfig& cfg);

/// e^{i phase} * pol_triple(alpha, beta, gamma).
Mat2 station_unitary(const StationConfig& s);

/// Two-qubit gate of the full setup, composed factor by factor as the
/// photon traverses it.  The closed block formulas of
/// assemble_from_vs are deliberately not used here, so the two paths
/// can be checked against each other.
Mat4 assemble_two_qubit(const SetupConfig& cfg);

/// Two-qubit gate with blocks
///   S_RR =  (1/2) v2 (vr + vl) v1,   S_RL = -(i/2) v2 (vr - vl),
///   S_LR =  (i/2) (vr - vl) v1,      S_LL =  (1/2) (vr + vl).
/// Inputs must be unitary within 1e-10.
Mat4 assemble_from_vs(const Mat2& v1, const Mat2& v2, const Mat2& vr, const Mat2& vl);

/// The four polarization blocks of a two-qubit operator, in spatial
/// (R, L) block order.
struct Blocks {
    Mat2 srr, srl, slr, sll;
};
Blocks blocks(const Mat4& s);

/// Polarization gates around a single symmetric beam splitter:
///   2^{-1/2} (|R><R| r2 r1 + |L><L| l2 l1 + i |L><R| l2 r1 + i |R><L| r2 l1).
/// Inputs must be unitary within 1e-10.
Mat4 bs_halfgate(const Mat2& r1, const Mat2& r2, const Mat2& l1, const Mat2& l2);

/// Diagonal spatial embedding |R><R| x r + |L><L| x l.
Mat4 embed_arm_pair(const Mat2& r, const Mat2& l);

}  // namespace sp2q

#endif
