#ifndef SP2Q_SYNTH_HPP
#define SP2Q_SYNTH_HPP

#include <array>

#include "sp2q/assembly.hpp"
#include "sp2q/mat.hpp"

namespace sp2q {

/// Factorization u = e^{i delta} e^{i(a/2) P3} e^{i(b/2) P2} e^{i(c/2) P3}
/// for a pair of anticommuting axis operators P2, P3.
struct EulerFactors {
    double delta;  ///< global phase, in (-pi, pi]
    double a;      ///< outer axis-3 angle
    double b;      ///< middle axis-2 angle, in [0, pi]
    double c;      ///< inner axis-3 angle
};

/// Decomposes a 2x2 unitary over the given axis pair.
///
/// Both axes must be Hermitian, unitary and traceless (Pauli-like) and
/// must anticommute.  Deterministic conventions: b in [0, pi]; when
/// b is 0 or pi the whole axis-3 rotation is reported in `a` and
/// c = 0.
EulerFactors euler_su2(const Mat2& u, const Mat2& axis2, const Mat2& axis3);

/// Mach-Zehnder settings realizing u exactly, global phase included.
MZConfig compile_spatial(const Mat2& u);

/// Station settings (phase shifter + three wave plates) realizing u
/// exactly, global phase included.
StationConfig compile_polarization(const Mat2& u);

/// Singular frame of a two-qubit unitary: the two singular angles
/// shared by all four polarization blocks, plus four orthonormal state
/// pairs fixed so that
///   S_RR = sum_k |psibar_k> cos_k <psi_k|,
///   S_LL = sum_k |chibar_k> cos_k <chi_k|,
///   i S_RL = sum_k |psibar_k> sin_k <chi_k|,
///   i S_LR = sum_k |chibar_k> sin_k <psi_k|
/// hold with no leftover phases.  Vectors are stored as columns.
struct SingularFrame {
    std::array<double, 2> cos_angles;  ///< cos theta_k, descending, in [0, 1]
    std::array<double, 2> sin_angles;  ///< matching sin theta_k
    Mat2 psi, psibar, chi, chibar;
};
SingularFrame singular_frame(const Mat4& s);

/// Solves the block equations for the four station unitaries:
///   V1 = sum_k |chi_k> (-i) <psi_k|,       V2 = sum_k |psibar_k> (+i) <chibar_k|,
///   VR = sum_k |chibar_k> e^{-i th_k} <chi_k|, VL = sum_k |chibar_k> e^{+i th_k} <chi_k|.
/// assemble_from_vs on the result reproduces s, global phase included.
struct VsDecomposition {
    Mat2 v1, v2, vr, vl;
};
VsDecomposition decompose_vs(const Mat4& s);

/// Full compiler: physical settings whose assembly reproduces u exactly.
SetupConfig compile_two_qubit(const Mat4& u);

}  // namespace sp2q

#endif
