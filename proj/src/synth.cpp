#include "sp2q/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sp2q {

namespace {

constexpr double kUnitaryTol = 1e-10;
// Below this coefficient a channel's pairing phase no longer influences
// the reconstruction beyond 1e-13 and is left at the eigenbasis gauge.
constexpr double kNegligible = 1e-13;

void require_unitary(const Mat2& m, const char* what) {
    if (!is_unitary(m, kUnitaryTol)) throw std::invalid_argument(std::string(what) + ": input is not unitary");
}

void require_unitary4(const Mat4& m, const char* what) {
    if (!is_unitary(m, kUnitaryTol)) throw std::invalid_argument(std::string(what) + ": input is not unitary");
}

cd det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Basis change whose columns diagonalize axis3 and carry axis2 to the
// standard sigma2 pattern [[0, -i], [i, 0]].
Mat2 axis_frame(const Mat2& axis2, const Mat2& axis3) {
    if (!is_hermitian(axis2, 1e-10) || !is_hermitian(axis3, 1e-10) || !is_unitary(axis2, 1e-10) ||
        !is_unitary(axis3, 1e-10))
        throw std::invalid_argument("euler_su2: axes must be Hermitian and unitary");
    if ((axis2 * axis3 + axis3 * axis2).frobenius_norm() > 1e-10)
        throw std::invalid_argument("euler_su2: axes must anticommute");

    const Eig2 e3 = eig_hermitian_2x2(axis3);
    Mat2 w = e3.vectors;

    // In the eigenbasis of axis3, axis2 is off-diagonal with a
    // unimodular entry; a phase on the second column makes it sigma2.
    const Mat2 a2 = w.adjoint() * axis2 * w;
    const cd lambda = cd(0, -1) / a2(0, 1);
    w(0, 1) *= lambda;
    w(1, 1) *= lambda;
    return w;
}

}  // namespace

EulerFactors euler_su2(const Mat2& u, const Mat2& axis2, const Mat2& axis3) {
    require_unitary(u, "euler_su2");
    const Mat2 w = axis_frame(axis2, axis3);

    EulerFactors f{};
    f.delta = 0.5 * std::arg(det2(u));
    const Mat2 v = w.adjoint() * (std::polar(1.0, -f.delta) * u) * w;

    // v is in SU(2): [[p, q], [-conj q, conj p]] with
    // p = e^{i(a+c)/2} cos(b/2), q = e^{i(a-c)/2} sin(b/2).
    const cd p = v(0, 0), q = v(0, 1);
    f.b = 2.0 * std::atan2(std::abs(q), std::abs(p));
    if (std::abs(q) <= 1e-12) {  // b = 0: merge both axis-3 turns into a
        f.a = 2.0 * std::arg(p);
        f.c = 0.0;
    } else if (std::abs(p) <= 1e-12) {  // b = pi
        f.a = 2.0 * std::arg(q);
        f.c = 0.0;
    } else {
        f.a = std::arg(p) + std::arg(q);
        f.c = std::arg(p) - std::arg(q);
    }
    return f;
}

MZConfig compile_spatial(const Mat2& u) {
    require_unitary(u, "compile_spatial");
    const EulerFactors f = euler_su2(u, pauli_tau(2), pauli_tau(3));
    const double arm_sum = 2.0 * f.delta - f.a - f.c;
    return MZConfig{PhaseAngle(f.c), PhaseAngle(f.a), PhaseAngle(0.5 * (arm_sum + f.b)),
                    PhaseAngle(0.5 * (arm_sum - f.b))};
}

StationConfig compile_polarization(const Mat2& u) {
    require_unitary(u, "compile_polarization");
    // Outer axis sigma2, middle axis sigma3, matching the triple's Euler
    // form e^{-i(g+3pi/4) s2} e^{i(a-2b+g) s3} e^{i(a-pi/4) s2}.
    const EulerFactors f = euler_su2(u, pauli_sigma(3), pauli_sigma(2));
    const double gamma = -0.5 * f.a - 0.75 * M_PI;
    const double alpha = 0.5 * f.c + 0.25 * M_PI;
    const double beta = 0.5 * (alpha + gamma - 0.5 * f.b);
    return StationConfig{PhaseAngle(f.delta), WavePlateAngle(alpha), WavePlateAngle(beta),
                         WavePlateAngle(gamma)};
}

namespace {

struct Column {
    cd x{}, y{};

    Column scaled(cd s) const { return Column{s * x, s * y}; }
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

Column col(const Mat2& m, int k) { return Column{m(0, k), m(1, k)}; }
Column mul(const Mat2& m, const Column& v) {
    return Column{m(0, 0) * v.x + m(0, 1) * v.y, m(1, 0) * v.x + m(1, 1) * v.y};
}
cd braket(const Column& bra, const Column& ket) { return std::conj(bra.x) * ket.x + std::conj(bra.y) * ket.y; }
void set_col(Mat2& m, int k, const Column& v) {
    m(0, k) = v.x;
    m(1, k) = v.y;
}

}  // namespace

namespace {

// How a frame vector was obtained.  A Root starts its channel's gauge
// chain on an exact eigenbasis; a Transported vector was carried through
// a block and holds the inter-channel pairing; a Free vector multiplies
// a negligible coefficient, so only orthonormality constrains it.
enum class VecRole { kRoot, kTransported, kFree };

// Restore pairwise orthonormality, adjusting the vector whose pairing
// content is the least constrained.
void reorthonormalize(std::array<Column, 2>& v, const std::array<VecRole, 2>& role) {
    int adjust;
    if (role[0] == VecRole::kFree && role[1] != VecRole::kFree)
        adjust = 0;
    else if (role[1] == VecRole::kFree && role[0] != VecRole::kFree)
        adjust = 1;
    else if (role[0] == VecRole::kTransported && role[1] == VecRole::kRoot)
        adjust = 0;
    else if (role[1] == VecRole::kTransported && role[0] == VecRole::kRoot)
        adjust = 1;
    else if (role[0] == VecRole::kTransported && role[1] == VecRole::kTransported)
        adjust = 1;
    else
        return;  // both on the same exact eigenbasis already
    const int anchor = 1 - adjust;
    v[anchor] = v[anchor].scaled(1.0 / v[anchor].norm());
    const cd overlap = braket(v[anchor], v[adjust]);
    v[adjust] = Column{v[adjust].x - overlap * v[anchor].x, v[adjust].y - overlap * v[anchor].y};
    v[adjust] = v[adjust].scaled(1.0 / v[adjust].norm());
}

}  // namespace

/*
 * Frame construction.  Each channel k is threaded through the block with
 * the larger coefficient, so every division is by max(cos_k, sin_k) or by
 * a coefficient explicitly above kNegligible:
 *
 *   cos_k >= sin_k:  psi_k  := eigenvector of S_RR^dag S_RR
 *                    psibar := S_RR psi / cos            (line 1 by psi-completeness)
 *                    chi    := (i S_RL)^dag psibar / sin (line 3 by psibar-completeness),
 *                              left eigenvector when sin is negligible
 *                    chibar := S_LL chi / cos            (line 2 by chi-completeness)
 *   sin_k > cos_k:   chi    := eigenvector of S_LL^dag S_LL
 *                    psibar := i S_RL chi / sin          (line 3 by chi-completeness)
 *                    psi    := S_RR^dag psibar / cos     (line 1 by psibar-completeness),
 *                              right eigenvector when cos is negligible
 *                    chibar := i S_LR psi / sin          (line 4 by psi-completeness)
 *
 * The remaining lines are forced by the unitarity of the input.  The
 * transport steps keep the gauge of both channels consistent across the
 * four sets even when the two singular values coincide and the
 * individual eigenvectors are arbitrary.  Transported vectors can pick
 * up a small mutual overlap when the transporting block is nearly
 * singular; each pair is re-orthonormalized and the vectors derived
 * from it are rebuilt afterwards.
 */
SingularFrame singular_frame(const Mat4& s) {
    require_unitary4(s, "singular_frame");
    const Blocks b = blocks(s);

    // Eigensystem of a Gram matrix, computed on the unit-norm rescaling
    // so that nearly-zero blocks still resolve their relative spectrum.
    auto scaled_eig = [](const Mat2& g) {
        const double n = g.frobenius_norm();
        if (n < 1e-280) return Eig2{{0.0, 0.0}, Mat2::identity()};
        Eig2 e = eig_hermitian_2x2(cd(1.0 / n) * g);
        e.values = {e.values[0] * n, e.values[1] * n};
        return e;
    };
    auto relative_gap = [](const Mat2& g, const Eig2& e) {
        const double n = g.frobenius_norm();
        return n < 1e-280 ? 0.0 : (e.values[0] - e.values[1]) / n;
    };

    const Mat2 g_rr = b.srr.adjoint() * b.srr;
    const Mat2 g_ll = b.sll.adjoint() * b.sll;
    const Mat2 g_rl = b.srl.adjoint() * b.srl;
    const Mat2 g_lr = b.slr.adjoint() * b.slr;
    const Eig2 right = scaled_eig(g_rr);
    const Eig2 left = scaled_eig(g_ll);
    const Eig2 cross = scaled_eig(g_rl);
    const Eig2 cross_lr = scaled_eig(g_lr);

    // The channel pairing is resolved by whichever spectrum separates the
    // two channels better in relative terms.  The off-diagonal Grams
    // carry the sine spectrum with the channels in reversed order.
    const bool sin_side_roots = relative_gap(g_rl, cross) > relative_gap(g_rr, right);

    // Singular values of a block: the large one from its Gram spectrum,
    // the small one via sigma_min = |det| / sigma_max, which stays
    // accurate when the Gram eigenvalue 1 - sigma_min^2 rounds to 1.
    auto singulars = [](const Mat2& m, double lam_max) {
        const double smax = std::min(1.0, std::sqrt(std::max(lam_max, 0.0)));
        const double smin = smax > 1e-150 ? std::min(smax, std::abs(det2(m)) / smax) : 0.0;
        return std::array<double, 2>{smax, smin};
    };
    const auto cosines = singulars(b.srr, right.values[0]);
    const auto sines = singulars(b.srl, cross.values[0]);

    // Channels are ordered by descending cosine, so the sines ascend.
    SingularFrame f{};
    f.cos_angles = cosines;
    f.sin_angles = {sines[1], sines[0]};

    const Mat2 irl = cd(0, 1) * b.srl;
    const Mat2 ilr = cd(0, 1) * b.slr;

    std::array<Column, 2> psi, psibar, chi, chibar;
    std::array<VecRole, 2> chi_role{}, psi_role{};

    // A channel is led by its larger coefficient.  If the two channels
    // would disagree while the spectrum is close to degenerate, their
    // eigenbases carry independent arbitrary gauges, so they must follow
    // the same chain; near the 45-degree tie every division is still
    // well above 0.5.
    std::array<bool, 2> cos_led{f.cos_angles[0] >= f.sin_angles[0],
                                f.cos_angles[1] >= f.sin_angles[1]};
    if (cos_led[0] != cos_led[1] && f.cos_angles[0] - f.cos_angles[1] < 0.1) cos_led[1] = cos_led[0];

    for (int k = 0; k < 2; ++k) {
        const double ck = f.cos_angles[static_cast<std::size_t>(k)];
        const double sk = f.sin_angles[static_cast<std::size_t>(k)];

        const std::size_t uk = static_cast<std::size_t>(k);
        if (cos_led[uk]) {
            // S_LR^dag S_LR shares the psi eigenbasis, ordered by sine.
            psi[k] = sin_side_roots ? col(cross_lr.vectors, 1 - k) : col(right.vectors, k);
            psi_role[uk] = VecRole::kRoot;
            psibar[k] = mul(b.srr, psi[k]).scaled(1.0 / ck);
            if (sk > kNegligible) {
                chi[k] = mul(irl.adjoint(), psibar[k]).scaled(1.0 / sk);
                chi_role[uk] = VecRole::kTransported;
            } else {
                chi[k] = col(left.vectors, k);
                chi_role[uk] = VecRole::kFree;
            }
        } else {
            // S_RL^dag S_RL shares the chi eigenbasis, ordered by sine.
            chi[k] = sin_side_roots ? col(cross.vectors, 1 - k) : col(left.vectors, k);
            chi_role[uk] = VecRole::kRoot;
            psibar[k] = mul(irl, chi[k]).scaled(1.0 / sk);
            if (ck > kNegligible) {
                psi[k] = mul(b.srr.adjoint(), psibar[k]).scaled(1.0 / ck);
                psi_role[uk] = VecRole::kTransported;
            } else {
                psi[k] = col(right.vectors, k);
                psi_role[uk] = VecRole::kFree;
            }
        }
    }

    reorthonormalize(chi, chi_role);
    reorthonormalize(psi, psi_role);

    // Dependent vectors, from the final chi and psi.
    for (int k = 0; k < 2; ++k) {
        const double ck = f.cos_angles[static_cast<std::size_t>(k)];
        const double sk = f.sin_angles[static_cast<std::size_t>(k)];
        chibar[k] = cos_led[static_cast<std::size_t>(k)] ? mul(b.sll, chi[k]).scaled(1.0 / ck)
                                                         : mul(ilr, psi[k]).scaled(1.0 / sk);
    }

    for (int k = 0; k < 2; ++k) {
        set_col(f.psi, k, psi[k]);
        set_col(f.psibar, k, psibar[k]);
        set_col(f.chi, k, chi[k]);
        set_col(f.chibar, k, chibar[k]);
    }
    return f;
}

VsDecomposition decompose_vs(const Mat4& s) {
    const SingularFrame f = singular_frame(s);

    auto add_outer = [](Mat2& m, const Column& ket, cd w, const Column& bra) {
        m(0, 0) += w * ket.x * std::conj(bra.x);
        m(0, 1) += w * ket.x * std::conj(bra.y);
        m(1, 0) += w * ket.y * std::conj(bra.x);
        m(1, 1) += w * ket.y * std::conj(bra.y);
    };

    VsDecomposition d{};
    for (int k = 0; k < 2; ++k) {
        const std::size_t uk = static_cast<std::size_t>(k);
        const cd arm = std::polar(1.0, -std::atan2(f.sin_angles[uk], f.cos_angles[uk]));
        add_outer(d.v1, col(f.chi, k), cd(0, -1), col(f.psi, k));
        add_outer(d.v2, col(f.psibar, k), cd(0, 1), col(f.chibar, k));
        add_outer(d.vr, col(f.chibar, k), arm, col(f.chi, k));
        add_outer(d.vl, col(f.chibar, k), std::conj(arm), col(f.chi, k));
    }
    return d;
}

SetupConfig compile_two_qubit(const Mat4& u) {
    require_unitary4(u, "compile_two_qubit");
    const VsDecomposition d = decompose_vs(u);
    return SetupConfig{compile_polarization(d.v1), compile_polarization(d.v2),
                       compile_polarization(d.vr), compile_polarization(d.vl)};
}

}  // namespace sp2q
