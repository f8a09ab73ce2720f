#include "sp2q/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sp2q {

Mat2 assemble_mz(const MZConfig& cfg) {
    return phase_shifter(Port::R, cfg.phi2) * beam_splitter() * phase_shifter(Port::R, cfg.vphi1) *
           phase_shifter(Port::L, cfg.vphi2) * mirror_pair() * beam_splitter() *
           phase_shifter(Port::R, cfg.phi1);
}

Mat2 station_unitary(const StationConfig& s) {
    return std::polar(1.0, s.phase.radians()) * pol_triple(s.alpha, s.beta, s.gamma);
}

Mat4 embed_arm_pair(const Mat2& r, const Mat2& l) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = r(i, j);
            m(2 + i, 2 + j) = l(i, j);
        }
    return m;
}

Mat4 assemble_two_qubit(const SetupConfig& cfg) {
    const Mat2 one = Mat2::identity();
    const Mat4 bs = kron(beam_splitter(), one);
    const Mat4 mirr = kron(mirror_pair(), one);

    const Mat4 entry = embed_arm_pair(station_unitary(cfg.entry), one);
    const Mat4 arms = embed_arm_pair(station_unitary(cfg.arm_r), station_unitary(cfg.arm_l));
    const Mat4 exit = embed_arm_pair(station_unitary(cfg.exit), one);

    return exit * bs * arms * mirr * bs * entry;
}

namespace {

void require_unitary(const Mat2& m, const char* what) {
    if (!is_unitary(m, 1e-10)) throw std::invalid_argument(std::string(what) + " is not unitary");
}

}  // namespace

Mat4 assemble_from_vs(const Mat2& v1, const Mat2& v2, const Mat2& vr, const Mat2& vl) {
    require_unitary(v1, "v1");
    require_unitary(v2, "v2");
    require_unitary(vr, "vr");
    require_unitary(vl, "vl");

    const cd half(0.5), mihalf(0.0, -0.5), ihalf(0.0, 0.5);
    const Mat2 sum = vr + vl;
    const Mat2 diff = vr - vl;

    const Mat2 srr = half * (v2 * sum * v1);
    const Mat2 srl = mihalf * (v2 * diff);
    const Mat2 slr = ihalf * (diff * v1);
    const Mat2 sll = half * sum;

    Mat4 s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            s(i, j) = srr(i, j);
            s(i, 2 + j) = srl(i, j);
            s(2 + i, j) = slr(i, j);
            s(2 + i, 2 + j) = sll(i, j);
        }
    return s;
}

Blocks blocks(const Mat4& s) {
    Blocks b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            b.srr(i, j) = s(i, j);
            b.srl(i, j) = s(i, 2 + j);
            b.slr(i, j) = s(2 + i, j);
            b.sll(i, j) = s(2 + i, 2 + j);
        }
    return b;
}

Mat4 bs_halfgate(const Mat2& r1, const Mat2& r2, const Mat2& l1, const Mat2& l2) {
    require_unitary(r1, "r1");
    require_unitary(r2, "r2");
    require_unitary(l1, "l1");
    require_unitary(l2, "l2");

    const cd w(1.0 / std::sqrt(2.0));
    const cd iw(0.0, 1.0 / std::sqrt(2.0));
    const Mat2 rr = w * (r2 * r1);
    const Mat2 ll = w * (l2 * l1);
    const Mat2 lr = iw * (l2 * r1);
    const Mat2 rl = iw * (r2 * l1);

    Mat4 s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            s(i, j) = rr(i, j);
            s(i, 2 + j) = rl(i, j);
            s(2 + i, j) = lr(i, j);
            s(2 + i, 2 + j) = ll(i, j);
        }
    return s;
}

}  // namespace sp2q
